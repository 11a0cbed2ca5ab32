//! Enumeration of candidate schemes and the congruence filter pipeline.

mod drivers;
mod forest;
mod pipeline;
pub mod reference;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use drivers::{
    classify_connected, classify_cubic_degree2, classify_ellipsoid, classify_m55, classify_oval_count,
    ClassificationResult, ClassificationRow, Counts, M55Options, M55Result, NamedScheme, ReferenceComparison,
};
pub use forest::{
    enumerate_forests, forest_counts, forest_from_levels, forest_levels, levels_text, sphere_class, sphere_coloring,
    LevelSequences, MAX_OVALS,
};
pub use pipeline::{default_filters, run_filters, FilterBundle, FilterVerdict};

use crate::model::ModelError;
use crate::scheme::SchemeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("{n} ovals exceed the generator limit of {max}")]
    Guard { n: usize, max: usize },
    #[error("unknown filter '{0}'")]
    UnknownFilter(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// A named congruence applied by [`run_filters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Harnack,
    Theorem1,
    Ellipsoid,
    Fiedler,
    Projective,
    ProjectiveClassical,
    HyperboloidChi,
    HyperboloidOrientation,
    PlaneOrientation,
    Surface,
}

impl Filter {
    pub const ALL: [Filter; 10] = [
        Filter::Harnack,
        Filter::Theorem1,
        Filter::Ellipsoid,
        Filter::Fiedler,
        Filter::Projective,
        Filter::ProjectiveClassical,
        Filter::HyperboloidChi,
        Filter::HyperboloidOrientation,
        Filter::PlaneOrientation,
        Filter::Surface,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Harnack => "harnack",
            Filter::Theorem1 => "theorem1",
            Filter::Ellipsoid => "ellipsoid",
            Filter::Fiedler => "fiedler",
            Filter::Projective => "projective",
            Filter::ProjectiveClassical => "projective-classical",
            Filter::HyperboloidChi => "hyperboloid-chi",
            Filter::HyperboloidOrientation => "hyperboloid-orientation",
            Filter::PlaneOrientation => "plane-orientation",
            Filter::Surface => "surface",
        }
    }

    /// Parses a comma-separated list.
    pub fn parse_list(text: &str) -> Result<Vec<Filter>, ClassifyError> {
        let mut out: Vec<Filter> = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let f = item.parse()?;
            if !out.contains(&f) {
                out.push(f);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Filter::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| ClassifyError::UnknownFilter(s.to_string()))
    }
}
