//! Plumbings over affine Dynkin trees, checked against the surgery
//! descriptions of the same manifolds.

use knotcover::{
    dynkin_graph, eta_sequence, parse_surgery, plumbing_pi1, wirtinger, BraidWord, SearchConfig,
};

fn main() -> knotcover::Result<()> {
    let cfg = SearchConfig::default();
    let surgeries = [
        ("E8t", Some(("AAA", "0"))),
        ("E6t", Some(("(ab)^3", "-2,-2,-2"))),
        ("E7t", Some(("aaaa", "-2,-2"))),
        ("D4t", None),
    ];
    for (name, surgery) in surgeries {
        let g = dynkin_graph(name)?;
        let p = plumbing_pi1(&g)?;
        println!(
            "{name}: {} vertices, H1 = {}",
            g.num_vertices(),
            p.abelianization()
        );
        println!("  simplified {}", p.simplify());
        let eta = eta_sequence(&p, 10, &cfg)?;
        println!("  plumbing eta {:?}", eta.values);
        if let Some((word, coeffs)) = surgery {
            let q = wirtinger(&BraidWord::parse(word)?.closure().orient()?)?
                .surgery(&parse_surgery(coeffs)?)?;
            let other = eta_sequence(&q, 10, &cfg)?;
            println!("  surgery  eta {:?} ({word} with {coeffs})", other.values);
            assert_eq!(eta, other);
        }
    }
    println!(
        "\n{}",
        serde_json::to_string(&dynkin_graph("D4t")?).unwrap()
    );
    Ok(())
}
