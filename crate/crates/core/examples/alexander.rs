//! Alexander polynomials of braid closures and the torsion built from them.

use knotcover::{alexander_poly, milnor_torsion, BraidWord};

fn main() -> knotcover::Result<()> {
    let rows = [
        ("trefoil", "AAA"),
        ("L7n1", "(ab)^3b"),
        ("L6a3", "ABCDCbaCdEdCBCDCeb"),
        ("6^3_3", "(ab)^3"),
        ("D4 Dynkin", "ABCCbaCCBCCb"),
        ("Hopf", "aa"),
        ("unknot", ""),
    ];
    for (name, word) in rows {
        let b = BraidWord::parse(word)?;
        println!(
            "{name:<10} {word:<20} {} strands, {} components: {}",
            b.strands(),
            b.closure_components(),
            alexander_poly(&b)
        );
    }

    let delta = alexander_poly(&BraidWord::parse("AAA")?);
    println!("\ntorsion of the trefoil: {}", milnor_torsion(&delta)?);

    // split closures have zero polynomial and no torsion
    let split = BraidWord::parse("b")?;
    println!("split closure of 'b': {}", alexander_poly(&split));
    assert!(milnor_torsion(&alexander_poly(&split)).is_err());
    Ok(())
}
