//! Exact symbolic computation for the Kauffman-bracket skein algebra of the
//! twice-punctured torus: q-difference operators, the generalized double
//! affine Hecke algebra representation, Dehn-twist automorphisms and the
//! cluster/Poisson model of the classical limit.

pub mod cluster;
pub mod daha;
pub mod error;
pub mod exact;
pub mod pi1;
pub mod qdiff;
pub mod report;
pub mod skein;

pub use error::{Error, Result};
pub use exact::{Context, LaurentPoly, Monomial, RationalFn, Scalar};

pub use qdiff::Operator;
pub use report::{Check, Level, Report};

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Qdiff,
    Daha,
    Skein,
    Cluster,
    Pi1,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Qdiff, Suite::Daha, Suite::Skein, Suite::Cluster, Suite::Pi1, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qdiff => "qdiff",
            Suite::Daha => "daha",
            Suite::Skein => "skein",
            Suite::Cluster => "cluster",
            Suite::Pi1 => "pi1",
            Suite::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Unsupported(format!("unknown suite '{s}'")))
    }

    pub fn run(self) -> Report {
        match self {
            Suite::Qdiff => qdiff::identities::verify_qdiff(-3..=3),
            Suite::Daha => daha::verify_daha(),
            Suite::Skein => skein::verify_skein(),
            Suite::Cluster => cluster::verify_cluster(),
            Suite::Pi1 => pi1::verify_pi1(),
            Suite::All => {
                let mut r = Report::new(Vec::new());
                for s in [Suite::Qdiff, Suite::Daha, Suite::Skein, Suite::Cluster, Suite::Pi1] {
                    r.extend(s.run());
                }
                r
            }
        }
    }
}
