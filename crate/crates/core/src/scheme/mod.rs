//! Real schemes: nesting forests of ovals on the components of a real
//! surface, optionally with a family of parallel noncontractible components
//! on a torus, and optionally with orientations.

mod index;
mod parse;
mod regions;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use index::{euler_integral_sq, index_function, IndexError, IndexFunction, IntegralValue, Ring};
pub use parse::{parse_scheme, print_scheme};
pub use regions::{regions, separations, two_coloring, Circle, Region, RegionDecomposition, RegionKind, TwoColoring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemeError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid scheme: {0}")]
    Invariant(String),
    #[error("scheme does not match the surface model: {0}")]
    ModelMismatch(String),
    #[error("scheme is not checkerboard colorable: {0}")]
    NotColorable(String),
}

impl SchemeError {
    pub fn position(&self) -> Option<usize> {
        match self {
            SchemeError::Syntax { position, .. } => Some(*position),
            _ => None,
        }
    }
}

/// Orientation of a curve component. For an oval, `Plus` means the index
/// grows by one when entering its interior; for a noncontractible family it
/// means the index grows by one crossing from annulus `k` into annulus `k+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Oval {
    pub sign: Option<Sign>,
    pub interior: Forest,
}

impl Oval {
    pub fn empty(sign: Option<Sign>) -> Self {
        Oval { sign, interior: Forest::default() }
    }

    pub fn with_interior(sign: Option<Sign>, interior: Forest) -> Self {
        Oval { sign, interior }
    }

    /// Number of ovals in the subtree rooted here, including this one.
    pub fn size(&self) -> usize {
        1 + self.interior.oval_count()
    }
}

/// A finite rooted forest of ovals; children of an oval are the ovals lying
/// immediately inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Forest(pub Vec<Oval>);

impl Forest {
    pub fn new(ovals: Vec<Oval>) -> Self {
        Forest(ovals)
    }

    /// `n` empty ovals.
    pub fn empty_ovals(n: usize, sign: Option<Sign>) -> Self {
        Forest(vec![Oval::empty(sign); n])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn oval_count(&self) -> usize {
        self.0.iter().map(Oval::size).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Oval> {
        self.0.iter()
    }

    pub fn max_depth(&self) -> usize {
        self.0.iter().map(|o| 1 + o.interior.max_depth()).max().unwrap_or(0)
    }

    /// Sorts every sibling list into canonical order and returns the
    /// canonical text.
    pub fn canonicalize(&mut self) -> String {
        parse::canonicalize_forest(self)
    }

    fn visit_signs(&self, out: &mut BTreeSet<bool>) {
        for o in &self.0 {
            out.insert(o.sign.is_some());
            o.interior.visit_signs(out);
        }
    }

    fn reverse_orientation(&mut self) {
        for o in &mut self.0 {
            o.sign = o.sign.map(Sign::flip);
            o.interior.reverse_orientation();
        }
    }
}

/// `l'` parallel noncontractible components of class `(s, t)` on a torus,
/// cutting it into `l'` annuli listed in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NoncontractibleFamily {
    pub s: u32,
    pub t: u32,
    pub sign: Option<Sign>,
    pub annuli: Vec<Forest>,
}

impl NoncontractibleFamily {
    pub fn count(&self) -> usize {
        self.annuli.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ComponentBody {
    Ovals(Forest),
    Noncontractible(NoncontractibleFamily),
}

impl ComponentBody {
    pub fn oval_count(&self) -> usize {
        match self {
            ComponentBody::Ovals(f) => f.oval_count(),
            ComponentBody::Noncontractible(nc) => nc.annuli.iter().map(Forest::oval_count).sum(),
        }
    }

    /// Ovals plus noncontractible components.
    pub fn curve_component_count(&self) -> usize {
        match self {
            ComponentBody::Ovals(f) => f.oval_count(),
            ComponentBody::Noncontractible(nc) => nc.count() + self.oval_count(),
        }
    }

    pub fn noncontractible(&self) -> Option<&NoncontractibleFamily> {
        match self {
            ComponentBody::Noncontractible(nc) => Some(nc),
            ComponentBody::Ovals(_) => None,
        }
    }
}

/// The part of a scheme lying on one component of the real surface. `tag`
/// names the surface component (`rp2`, `s2`, ...); `None` stands for the
/// unique component of a connected surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentScheme {
    pub tag: Option<String>,
    pub body: ComponentBody,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Oriented,
    Unoriented,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealScheme {
    components: Vec<ComponentScheme>,
}

impl RealScheme {
    /// Validates orientation consistency, tag uniqueness and the `(s, t)`
    /// constraints, then canonicalizes sibling order.
    pub fn new(components: Vec<ComponentScheme>) -> Result<Self, SchemeError> {
        if components.is_empty() {
            return Err(SchemeError::Invariant("a scheme needs at least one component".into()));
        }
        let untagged = components.iter().filter(|c| c.tag.is_none()).count();
        if untagged > 0 && components.len() > 1 {
            return Err(SchemeError::Invariant("components of a multi-component scheme must be tagged".into()));
        }
        let mut seen = BTreeSet::new();
        for c in &components {
            if let Some(tag) = &c.tag {
                if !seen.insert(tag.clone()) {
                    return Err(SchemeError::Invariant(format!("surface component {tag} listed twice")));
                }
            }
            if let ComponentBody::Noncontractible(nc) = &c.body {
                if nc.annuli.is_empty() {
                    return Err(SchemeError::Invariant("a noncontractible family needs l' > 0".into()));
                }
                if gcd(nc.s, nc.t) != 1 {
                    return Err(SchemeError::Invariant(format!(
                        "class ({}, {}) of noncontractible components must be coprime",
                        nc.s, nc.t
                    )));
                }
            }
        }
        let mut scheme = RealScheme { components };
        scheme.orientation()?;
        scheme.canonicalize();
        Ok(scheme)
    }

    /// A connected-surface scheme made of one oval forest.
    pub fn from_forest(forest: Forest) -> Result<Self, SchemeError> {
        RealScheme::new(vec![ComponentScheme { tag: None, body: ComponentBody::Ovals(forest) }])
    }

    pub fn empty() -> Self {
        RealScheme { components: vec![ComponentScheme { tag: None, body: ComponentBody::Ovals(Forest::default()) }] }
    }

    pub fn components(&self) -> &[ComponentScheme] {
        &self.components
    }

    pub fn oval_count(&self) -> usize {
        self.components.iter().map(|c| c.body.oval_count()).sum()
    }

    pub fn curve_component_count(&self) -> usize {
        self.components.iter().map(|c| c.body.curve_component_count()).sum()
    }

    pub fn orientation(&self) -> Result<Orientation, SchemeError> {
        let mut flags = BTreeSet::new();
        for c in &self.components {
            match &c.body {
                ComponentBody::Ovals(f) => f.visit_signs(&mut flags),
                ComponentBody::Noncontractible(nc) => {
                    flags.insert(nc.sign.is_some());
                    for a in &nc.annuli {
                        a.visit_signs(&mut flags);
                    }
                }
            }
        }
        match (flags.contains(&true), flags.contains(&false)) {
            (true, true) => {
                Err(SchemeError::Invariant("orientation signs must be given on all components or on none".into()))
            }
            (true, false) => Ok(Orientation::Oriented),
            _ => Ok(Orientation::Unoriented),
        }
    }

    pub fn is_oriented(&self) -> bool {
        matches!(self.orientation(), Ok(Orientation::Oriented))
    }

    /// The same scheme with every orientation reversed.
    pub fn reversed(&self) -> RealScheme {
        let mut out = self.clone();
        for c in &mut out.components {
            match &mut c.body {
                ComponentBody::Ovals(f) => f.reverse_orientation(),
                ComponentBody::Noncontractible(nc) => {
                    nc.sign = nc.sign.map(Sign::flip);
                    for a in &mut nc.annuli {
                        a.reverse_orientation();
                    }
                }
            }
        }
        out.canonicalize();
        out
    }

    /// Surface component index (in scheme order) of every curve component,
    /// numbered as in [`regions`].
    pub fn circle_components(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            out.extend(std::iter::repeat_n(i, c.body.curve_component_count()));
        }
        out
    }

    fn canonicalize(&mut self) {
        for c in &mut self.components {
            match &mut c.body {
                ComponentBody::Ovals(f) => {
                    f.canonicalize();
                }
                ComponentBody::Noncontractible(nc) => {
                    for a in &mut nc.annuli {
                        a.canonicalize();
                    }
                }
            }
        }
    }
}

impl fmt::Display for RealScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_scheme(self))
    }
}

impl std::str::FromStr for RealScheme {
    type Err = SchemeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scheme(s)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of disorienting curve components on each surface component is
/// even. `disorienting` holds curve component ids as numbered by
/// [`RealScheme::circle_components`].
pub fn disorienting_count_check(scheme: &RealScheme, disorienting: &BTreeSet<usize>) -> bool {
    let owners = scheme.circle_components();
    let mut counts = vec![0usize; scheme.components().len()];
    for &id in disorienting {
        if let Some(&c) = owners.get(id) {
            counts[c] += 1;
        }
    }
    counts.iter().all(|n| n % 2 == 0)
}
