//! Words in a free group. A letter is `±(g + 1)` for generator index `g`.

pub type Word = Vec<i32>;

#[inline]
pub fn gen_index(letter: i32) -> usize {
    letter.unsigned_abs() as usize - 1
}

#[inline]
pub fn letter(gen: usize, positive: bool) -> i32 {
    let l = gen as i32 + 1;
    if positive {
        l
    } else {
        -l
    }
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancellation across the ends.
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let mut r = free_reduce(w);
    let mut lo = 0;
    let mut hi = r.len();
    while hi - lo >= 2 && r[lo] == -r[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    r.truncate(hi);
    r.drain(..lo);
    r
}

/// `w^n`, with negative `n` meaning powers of the inverse.
pub fn power(w: &[i32], n: i64) -> Word {
    let base = if n < 0 { inverse(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
    for _ in 0..n.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    free_reduce(&out)
}

/// `x⁻¹ y⁻¹ x y`
pub fn commutator(x: &[i32], y: &[i32]) -> Word {
    let mut w = inverse(x);
    w.extend(inverse(y));
    w.extend_from_slice(x);
    w.extend_from_slice(y);
    free_reduce(&w)
}

pub fn concat(parts: &[&[i32]]) -> Word {
    let mut w = Vec::new();
    for p in parts {
        w.extend_from_slice(p);
    }
    free_reduce(&w)
}

/// Exponent sum of each generator.
pub fn exponent_sums(w: &[i32], generators: usize) -> Vec<i64> {
    let mut v = vec![0; generators];
    for &l in w {
        v[gen_index(l)] += l.signum() as i64;
    }
    v
}

/// Lexicographically least rotation of `w` and of its inverse. Two cyclically
/// reduced relators define the same normal closure element up to conjugacy
/// and inversion iff their keys agree.
pub fn relator_key(w: &[i32]) -> Word {
    fn least_rotation(w: &[i32]) -> Word {
        (0..w.len().max(1))
            .map(|s| {
                let mut r = w[s.min(w.len())..].to_vec();
                r.extend_from_slice(&w[..s.min(w.len())]);
                r
            })
            .min()
            .unwrap_or_default()
    }
    let a = least_rotation(w);
    let b = least_rotation(&inverse(w));
    a.min(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(free_reduce(&[1, 2, -2, 3]), vec![1, 3]);
        assert_eq!(cyclic_reduce(&[-2, 1, 3, 2]), vec![1, 3]);
        assert_eq!(cyclic_reduce(&[1, 2, -1]), vec![2]);
    }

    #[test]
    fn commutator_expansion() {
        // (a, B^2) = a^-1 b^2 a b^-2
        let bb = power(&[2], -2);
        assert_eq!(commutator(&[1], &bb), vec![-1, 2, 2, 1, -2, -2]);
    }

    #[test]
    fn keys_identify_rotations_and_inverses() {
        assert_eq!(relator_key(&[1, 2, -1, -2]), relator_key(&[2, -1, -2, 1]));
        assert_eq!(
            relator_key(&[1, 2, -1, -2]),
            relator_key(&inverse(&[1, 2, -1, -2]))
        );
        assert_ne!(relator_key(&[1, 1, 2]), relator_key(&[1, 2, 2]));
    }
}
