//! The skein relation at every letter, and invariance under Markov moves.

use knotcover::{alexander_poly, equal_up_to_units, skein_defect, skein_triple, BraidWord};

fn main() -> knotcover::Result<()> {
    let b = BraidWord::parse("abAbc")?;
    for pos in 0..b.len() {
        let (plus, minus, zero) = skein_triple(&b, pos)?;
        println!(
            "{pos}: D({plus}) = {}, D({minus}) = {}, D({zero}) = {}",
            alexander_poly(&plus),
            alexander_poly(&minus),
            alexander_poly(&zero)
        );
        assert!(skein_defect(&b, pos)?.is_zero());
    }

    let delta = alexander_poly(&b);
    let conj = b.markov_conjugate(2)?;
    let stab = b.markov_stabilize(false);
    println!("\n{b} -> conjugate {conj} -> stabilized {stab}");
    assert!(equal_up_to_units(&delta, &alexander_poly(&conj)));
    assert!(equal_up_to_units(&delta, &alexander_poly(&stab)));
    println!("all three have polynomial {delta} up to units");
    Ok(())
}
