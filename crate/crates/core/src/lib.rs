//! Balmer spectra and thick tensor ideals of rational `G`-spectra, computed
//! symbolically.
//!
//! Groups are finite groups given by multiplication tables, the circle, `O(2)`
//! and `SO(3)`. Closed subgroups are handled up to conjugacy as
//! [`SubgroupClass`] values, and possibly infinite sets of classes as
//! [`ClassSet`]s (finite or cofinite along each infinite series).
//!
//! * [`group`]: subgroup catalogues, subconjugacy, the cotoral order and
//!   restriction to subgroups.
//! * [`phi_space`]: the space `ΦG` of classes with finite Weyl group and its
//!   clopen sets.
//! * [`burnside`]: tables of marks and idempotents of the rational Burnside
//!   ring.
//! * [`isotropy`]: supports of formal spectra, the Balmer spectrum as a poset,
//!   realizability and thick ideal membership.
//! * [`semifree`]: the algebraic model of semifree circle spectra and wide
//!   spheres.
//! * [`parse`] and [`cli`]: the text grammars and the `ttg` command line.
//!
//! ```
//! use ttg_spectra::{isotropy, parse_expr, GroupId};
//!
//! let g = GroupId::O2;
//! let x = parse_expr(&g, "basic(O2,3)").unwrap();
//! let s = isotropy::support(&g, &x).unwrap();
//! assert_eq!(isotropy::ctmax(&s).to_string(), "{O2}+tailD(3)");
//! assert!(isotropy::is_realizable(&s));
//! ```

pub mod burnside;
pub mod classset;
pub mod cli;
pub mod error;
pub mod group;
pub mod isotropy;
pub mod linalg;
pub mod parse;
pub mod phi_space;
pub mod semifree;

pub use burnside::{BurnsideElement, MarksMatrix};
pub use classset::{ClassSet, IndexSet};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupId, Series, SubgroupClass};
pub use isotropy::{BalmerPrime, SpectrumExpr};
pub use parse::{parse_expr, parse_set};
pub use phi_space::{ClopenSet, PhiSpace};
pub use semifree::{LaurentPoly, WideSphere};
