//! Dehn surgery: homology spheres, and how chirality shows up in the
//! covering counts.

use knotcover::{eta_sequence, parse_surgery, wirtinger, BraidWord, SearchConfig};

fn surgered(word: &str, coeffs: &str) -> knotcover::Result<knotcover::FpPresentation> {
    let p = wirtinger(&BraidWord::parse(word)?.closure().orient()?)?;
    p.surgery(&parse_surgery(coeffs)?)
}

fn main() -> knotcover::Result<()> {
    let cfg = SearchConfig::default();
    let cases = [
        ("aaa", "1", "+1 on the positive trefoil: Poincare sphere"),
        (
            "AAA",
            "1",
            "+1 on the negative trefoil: Brieskorn sphere (2,3,7)",
        ),
        ("aBabAb", "4,1,2", "Kirby link (4,1)(1,1)(2,1)"),
        ("AAA", "0", "0-surgery on the trefoil"),
        ("aa", "2/1,3/2", "Hopf link, two fillings"),
    ];
    for (word, coeffs, what) in cases {
        let p = surgered(word, coeffs)?;
        let s = p.simplify();
        let eta = eta_sequence(&p, 6, &cfg)?;
        println!("{what}");
        println!(
            "  {s}\n  H1 = {}, eta = {:?}\n",
            s.abelianization(),
            eta.values
        );
    }

    // coefficients must be coprime
    assert!(surgered("AAA", "2/4").is_err());
    Ok(())
}
