use crate::error::{Error, Result};

/// Sum of the divisors of `d`.
pub fn divisor_sigma(d: u64) -> u64 {
    (1..=d).filter(|e| d.is_multiple_of(*e)).sum()
}

/// Number of sublattices of index `d` in `ℤ^rank`, for rank 1 to 3.
pub fn sublattice_oracle(rank: u32, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::domain("index must be at least 1"));
    }
    match rank {
        1 => Ok(1),
        2 => Ok(divisor_sigma(d)),
        3 => Ok((1..=d)
            .filter(|e| d.is_multiple_of(*e))
            .map(|e| e * divisor_sigma(e))
            .sum()),
        _ => Err(Error::domain(format!(
            "sublattice oracle covers ranks 1 to 3, got {rank}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(sublattice_oracle(2, 6).unwrap(), 12);
        assert_eq!(sublattice_oracle(3, 2).unwrap(), 7);
        assert_eq!(sublattice_oracle(1, 10).unwrap(), 1);
        let z3: Vec<u64> = (1..=5).map(|d| sublattice_oracle(3, d).unwrap()).collect();
        assert_eq!(z3, vec![1, 7, 13, 35, 31]);
        assert!(sublattice_oracle(4, 2).is_err());
        assert!(sublattice_oracle(2, 0).is_err());
    }

    /// Hermite normal forms of index-d sublattices of ℤ², counted directly.
    #[test]
    fn rank_two_matches_hermite_count() {
        for d in 1..=12u64 {
            let mut n = 0;
            for a in (1..=d).filter(|a| d % a == 0) {
                n += d / a; // upper triangular [[a, b], [0, d/a]] with 0 <= b < d/a
            }
            assert_eq!(sublattice_oracle(2, d).unwrap(), n);
        }
    }
}
