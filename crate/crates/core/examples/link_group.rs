//! Wirtinger presentations with peripheral systems, Tietze simplification
//! and abelianization.

use knotcover::{wirtinger, BraidWord};

fn main() -> knotcover::Result<()> {
    for word in ["AAA", "(ab)^3b", "(aB)^3"] {
        let d = BraidWord::parse(word)?.closure().orient()?;
        let p = wirtinger(&d)?;
        println!("{word}: {p}");
        for (i, per) in p.peripheral().iter().enumerate() {
            println!(
                "  component {i}: meridian {}, longitude {}",
                p.format_word(&per.meridian),
                p.format_word(&per.longitude)
            );
        }
        let s = p.simplify();
        println!("  simplified: {s}");
        println!("  H1 = {}\n", s.abelianization());
    }
    Ok(())
}
