//! Free abelian groups: subgroup counts against the closed-form sublattice
//! counts, and the Borromean rings with every component 0-surgered.

use knotcover::{
    builtin, eta_sequence, parse_surgery, sublattice_oracle, wirtinger, BraidWord, SearchConfig,
};

fn main() -> knotcover::Result<()> {
    let cfg = SearchConfig::default();
    let z2 = eta_sequence(&builtin("Z2").unwrap(), 8, &cfg)?;
    let sigma: Vec<u64> = (1..=8).map(|d| sublattice_oracle(2, d).unwrap()).collect();
    println!("Z^2 {:?}\n    {:?}", z2.values, sigma);

    let z3 = eta_sequence(&builtin("Z3").unwrap(), 6, &cfg)?;
    let oracle: Vec<u64> = (1..=6).map(|d| sublattice_oracle(3, d).unwrap()).collect();
    println!("Z^3 {:?}\n    {:?}", z3.values, oracle);

    let br0 = wirtinger(&BraidWord::parse("(aB)^3")?.closure().orient()?)?
        .surgery(&parse_surgery("0,0,0")?)?;
    println!("BR0 {:?}", eta_sequence(&br0, 6, &cfg)?.values);
    println!("BR0 H1 = {}", br0.abelianization());
    Ok(())
}
