//! The Seifert matrix of a braid's Bennequin surface and its loop basis.

use knotcover::{seifert_matrix, BraidWord};

fn main() -> knotcover::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "(ab)^3b".into());
    let b = BraidWord::parse(&word)?;
    let v = seifert_matrix(&b)?;
    println!(
        "{word}: {} bands, {} strands, rank {}",
        b.len(),
        b.strands(),
        v.betti()
    );
    for (loop_, row) in v.basis().iter().zip(v.entries()) {
        let cells: String = row.iter().map(|x| format!("{x:>3}")).collect();
        println!(
            "  sigma_{} bands {}..{} |{cells}",
            loop_.column, loop_.from, loop_.to
        );
    }
    println!("det(V - tV^T) = {:?}", v.alexander_determinant().coeffs());
    println!("det(V + V^T)  = {}", v.intersection_determinant());
    Ok(())
}
