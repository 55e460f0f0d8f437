//! Planar diagrams: orientation, crossing signs, linking numbers, Seifert
//! circles, and the Alexander polynomial of an arbitrarily oriented link.

use knotcover::{alexander_poly, diagram_alexander_poly, BraidWord, PDDiagram};

fn main() -> knotcover::Result<()> {
    let trefoil = PDDiagram::parse("[(1,5,2,4),(3,1,4,6),(5,3,6,2)]")?;
    let d = trefoil.orient()?;
    println!("{trefoil}");
    println!("signs {:?}, writhe {}", d.signs(), d.writhe());
    let sc = d.seifert_circles();
    println!(
        "Seifert circles {}, genus-surface rank {}",
        sc.circles, sc.betti
    );
    println!("Alexander polynomial {}", diagram_alexander_poly(&d)?);

    // Closing a braid orients every strand the same way.
    let kirby = BraidWord::parse("aBabAb")?;
    let d = kirby.closure().orient()?;
    println!("\nclosure of aBabAb: {} components", d.num_components());
    println!("linking matrix {:?}", d.linking_matrix());
    println!("as closed: {}", alexander_poly(&kirby));
    for c in 0..d.num_components() {
        let r = d.reversed(c)?;
        println!(
            "component {c} reversed: {}  (linking {:?})",
            diagram_alexander_poly(&r)?,
            r.linking_matrix()[c]
        );
    }
    println!(
        "(ab)^3 for comparison: {}",
        alexander_poly(&BraidWord::parse("(ab)^3")?)
    );
    Ok(())
}
