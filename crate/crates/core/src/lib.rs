//! Alexander polynomials of braid closures, link groups, Dehn surgery and
//! counts of finite coverings.
//!
//! The pipeline runs braid word → planar diagram → Seifert matrix or
//! Wirtinger presentation → surgery → low-index subgroup enumeration:
//!
//! ```
//! use knotcover::{alexander_poly, eta_sequence, wirtinger, BraidWord, SearchConfig};
//!
//! let trefoil: BraidWord = "AAA".parse().unwrap();
//! assert_eq!(alexander_poly(&trefoil).to_string(), "t - 1 + t^-1");
//!
//! let group = wirtinger(&trefoil.closure().orient().unwrap()).unwrap();
//! let eta = eta_sequence(&group, 6, &SearchConfig::default()).unwrap();
//! assert_eq!(eta.get(6), Some(8));
//! ```

pub mod alexander;
pub mod braid;
pub mod diagram;
pub mod error;
pub mod fpgroup;
pub mod lowindex;
pub mod plumbing;
pub mod poly;
pub mod reproduce;

pub use alexander::{
    alexander_poly, diagram_alexander_poly, equal_up_to_units, milnor_torsion, seifert_matrix,
    skein_defect, skein_triple, SeifertMatrix, TorsionFunction,
};
pub use braid::BraidWord;
pub use diagram::{OrientedDiagram, PDDiagram};
pub use error::{Error, Result};
pub use fpgroup::{
    builtin, parse_surgery, wirtinger, AbelianInvariants, FpPresentation, SurgeryCoefficient,
};
pub use lowindex::{
    eta_sequence, low_index_classes, perm_image_order, reidemeister_schreier, sublattice_oracle,
    CosetTable, EtaSequence, SearchConfig, SubgroupClass,
};
pub use plumbing::{dynkin_graph, plumbing_pi1, PlumbingGraph};
pub use poly::HalfLaurent;
