//! Exact analysis of germs of singular holomorphic foliations at the origin
//! of ℂ²: quadratic blow-up reduction of singularities, classification of the
//! simple models, holonomy dynamics as time-1 flows, Levi-flat integrability
//! identities, and Rolle-tangency verdicts with numerical evidence.
//!
//! ```
//! use pfaff::report::{analyze_source, AnalysisStatus, ConfigSnapshot};
//!
//! let (report, status) =
//!     analyze_source("x*(1+(1/2)*y)*dy - y^2*dx", &ConfigSnapshot::default()).unwrap();
//! assert_eq!(status, AnalysisStatus::Compatible);
//! assert_eq!(report.reduction.nodes[0].class, "saddle-node(k=1, mu=1/2)");
//! ```

pub mod error;
pub mod scalar;
pub mod upoly;
pub mod poly;
pub mod forms;
pub mod algebraic;
pub mod classify;
pub mod nf;
pub mod roots;
pub mod blowup;
pub mod parser;
pub mod ode;
pub mod holonomy;
pub mod rolle;
pub mod logforms;
pub mod report;

pub use error::{AlgebraError, ParseError};
pub use forms::{HoloOneForm, MeroOneForm, RealPForm};
pub use poly::{Poly, Poly2, Poly4};
pub use scalar::{Coeff, GaussianRational, Ring};
pub use upoly::UPoly;
