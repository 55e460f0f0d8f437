//! Conjugacy classes of finite-index subgroups: the eight index-6 classes of
//! the trefoil group, their homology, cusps and permutation images.

use knotcover::lowindex::derived_subgroup_order;
use knotcover::{
    eta_sequence, low_index_classes, perm_image_order, reidemeister_schreier, wirtinger, BraidWord,
    SearchConfig,
};

fn main() -> knotcover::Result<()> {
    let cfg = SearchConfig::default();
    let p = wirtinger(&BraidWord::parse("AAA")?.closure().orient()?)?;
    println!("trefoil group {p}");
    println!("eta = {:?}\n", eta_sequence(&p, 6, &cfg)?.values);

    println!("index 6:");
    for c in low_index_classes(&p, 6, &cfg)? {
        let h = reidemeister_schreier(&p, &c.table)?;
        println!(
            "  normal {:<5} H1 {:<14} cusps {} image order {:>3} derived {:>3}  rows {:?}",
            c.normal,
            h.abelianization().to_string(),
            c.table.cusps(&p)?,
            perm_image_order(&c.table),
            derived_subgroup_order(&c.table),
            c.table.rows()
        );
    }

    let six = wirtinger(&BraidWord::parse("(ab)^3")?.closure().orient()?)?;
    println!("\n6^3_3: eta = {:?}", eta_sequence(&six, 6, &cfg)?.values);
    Ok(())
}
