//! Faces of the curve arrangement, their Euler characteristics and the
//! checkerboard colorings.

use serde::Serialize;

use super::{ComponentBody, Forest, RealScheme, SchemeError, Sign};
use crate::model::{Carrier, SurfaceModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKind {
    /// The complement of the top-level ovals on a component without
    /// noncontractible curves.
    Outer,
    /// An annulus between two consecutive noncontractible components,
    /// minus the ovals it contains.
    Annulus,
    /// The inside of an oval minus the ovals immediately inside it.
    Interior,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub chi: i64,
    pub depth: u32,
    pub color: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
    /// Curve component ids on the boundary.
    pub boundary: Vec<usize>,
    pub component: usize,
    pub kind: RegionKind,
    pub orientable: bool,
}

/// A curve component with the two regions it separates. Entering `inside`
/// from `outside` raises the index by the sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circle {
    pub component: usize,
    pub sign: Option<Sign>,
    pub inside: usize,
    pub outside: usize,
    pub noncontractible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionDecomposition {
    /// Surface component tags, in decomposition order.
    pub components: Vec<String>,
    pub carriers: Vec<Carrier>,
    pub regions: Vec<Region>,
    pub circles: Vec<Circle>,
    pub chi_rb: i64,
    /// Components whose noncontractible family has odd size.
    #[serde(skip)]
    uncolorable: Vec<usize>,
}

impl RegionDecomposition {
    pub fn chi_total(&self) -> i64 {
        self.regions.iter().map(|r| r.chi).sum()
    }

    pub fn is_colorable(&self) -> bool {
        self.uncolorable.is_empty()
    }

    /// Regions of one surface component.
    pub fn component_regions(&self, component: usize) -> impl Iterator<Item = (usize, &Region)> {
        self.regions.iter().enumerate().filter(move |(_, r)| r.component == component)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoColoring {
    pub chi1: i64,
    pub chi2: i64,
    /// Color (1 or 2) of every region of the decomposition.
    #[serde(skip)]
    pub colors: Vec<u8>,
}

impl TwoColoring {
    pub fn chi(&self, color: u8) -> i64 {
        if color == 1 {
            self.chi1
        } else {
            self.chi2
        }
    }

    pub fn regions_of(&self, color: u8) -> impl Iterator<Item = usize> + '_ {
        self.colors.iter().enumerate().filter(move |(_, &c)| c == color).map(|(i, _)| i)
    }

    pub fn swapped(&self) -> TwoColoring {
        TwoColoring { chi1: self.chi2, chi2: self.chi1, colors: self.colors.iter().map(|&c| 3 - c).collect() }
    }

    fn from_colors(d: &RegionDecomposition, colors: Vec<u8>) -> Self {
        let mut chi = [0i64; 2];
        for (r, &c) in d.regions.iter().zip(&colors) {
            chi[usize::from(c - 1)] += r.chi;
        }
        TwoColoring { chi1: chi[0], chi2: chi[1], colors }
    }
}

/// Pairs every model component with the part of the scheme lying on it, in
/// scheme order followed by components the scheme leaves out.
fn match_components<'a>(
    scheme: &'a RealScheme,
    model: &SurfaceModel,
) -> Result<Vec<(usize, Option<&'a ComponentBody>)>, SchemeError> {
    let comps = scheme.components();
    if comps.len() == 1 && comps[0].tag.is_none() {
        if model.components.len() != 1 {
            let tags: Vec<&str> = model.components.iter().map(|c| c.tag.as_str()).collect();
            return Err(SchemeError::ModelMismatch(format!(
                "the {} model has {} real components; tag the scheme parts with {}",
                model.name(),
                tags.len(),
                tags.iter().map(|t| format!("@{t}")).collect::<Vec<_>>().join(", ")
            )));
        }
        return Ok(vec![(0, Some(&comps[0].body))]);
    }
    let mut out = Vec::new();
    for c in comps {
        let tag = c.tag.as_deref().unwrap_or("");
        let idx =
            model.components.iter().position(|m| m.tag == tag).ok_or_else(|| {
                SchemeError::ModelMismatch(format!("the {} model has no component {tag}", model.name()))
            })?;
        out.push((idx, Some(&c.body)));
    }
    for idx in 0..model.components.len() {
        if !out.iter().any(|&(i, _)| i == idx) {
            out.push((idx, None));
        }
    }
    Ok(out)
}

/// Splits each component of RB along the curve. Regions are listed per
/// component in preorder, outer region (or annulus slot) before the ovals
/// inside it; curve components are numbered in the same walk.
pub fn regions(scheme: &RealScheme, model: &SurfaceModel) -> Result<RegionDecomposition, SchemeError> {
    let matched = match_components(scheme, model)?;
    let mut d = RegionDecomposition {
        components: Vec::new(),
        carriers: Vec::new(),
        regions: Vec::new(),
        circles: Vec::new(),
        chi_rb: model.chi_rb,
        uncolorable: Vec::new(),
    };
    let empty = ComponentBody::Ovals(Forest::default());
    for (slot, (idx, body)) in matched.into_iter().enumerate() {
        let comp = &model.components[idx];
        d.components.push(comp.tag.clone());
        d.carriers.push(comp.carrier);
        let body = body.unwrap_or(&empty);
        match body {
            ComponentBody::Ovals(f) => {
                let outer =
                    push_region(&mut d, slot, comp.carrier.chi(), 0, RegionKind::Outer, comp.carrier.orientable());
                add_forest(&mut d, slot, outer, f, 0);
            }
            ComponentBody::Noncontractible(nc) => {
                if comp.carrier != Carrier::Torus {
                    return Err(SchemeError::ModelMismatch(format!(
                        "noncontractible families are supported on a torus, component {} is not one",
                        comp.tag
                    )));
                }
                let l = nc.count();
                let first = d.regions.len();
                let slot_ids: Vec<usize> =
                    (0..l).map(|k| push_region(&mut d, slot, 0, k as u32, RegionKind::Annulus, true)).collect();
                // circles k separates annulus k from annulus k+1
                for k in 0..l {
                    let (a, b) = (slot_ids[k], slot_ids[(k + 1) % l]);
                    let id = d.circles.len();
                    d.circles.push(Circle {
                        component: slot,
                        sign: nc.sign,
                        inside: b,
                        outside: a,
                        noncontractible: true,
                    });
                    d.regions[a].boundary.push(id);
                    if b != a {
                        d.regions[b].boundary.push(id);
                    }
                }
                debug_assert_eq!(first, slot_ids[0]);
                for (k, annulus) in nc.annuli.iter().enumerate() {
                    add_forest(&mut d, slot, slot_ids[k], annulus, k as u32);
                }
                if l % 2 == 1 {
                    d.uncolorable.push(slot);
                }
            }
        }
    }
    Ok(d)
}

fn push_region(
    d: &mut RegionDecomposition,
    component: usize,
    chi: i64,
    depth: u32,
    kind: RegionKind,
    orientable: bool,
) -> usize {
    d.regions.push(Region {
        chi,
        depth,
        color: if depth.is_multiple_of(2) { 1 } else { 2 },
        index: None,
        boundary: Vec::new(),
        component,
        kind,
        orientable,
    });
    d.regions.len() - 1
}

fn add_forest(d: &mut RegionDecomposition, component: usize, parent: usize, forest: &Forest, depth: u32) {
    d.regions[parent].chi -= forest.0.len() as i64;
    for oval in forest.iter() {
        let circle = d.circles.len();
        d.circles.push(Circle { component, sign: oval.sign, inside: 0, outside: parent, noncontractible: false });
        let inner = push_region(d, component, 1, depth + 1, RegionKind::Interior, true);
        d.circles[circle].inside = inner;
        d.regions[parent].boundary.push(circle);
        d.regions[inner].boundary.push(circle);
        add_forest(d, component, inner, &oval.interior, depth + 1);
    }
}

/// The checkerboard coloring with color 1 on the even-depth regions, so the
/// outer region of every component gets color 1.
pub fn two_coloring(scheme: &RealScheme, model: &SurfaceModel) -> Result<TwoColoring, SchemeError> {
    let d = regions(scheme, model)?;
    coloring_of(&d)
}

pub(crate) fn coloring_of(d: &RegionDecomposition) -> Result<TwoColoring, SchemeError> {
    if let Some(&c) = d.uncolorable.first() {
        return Err(SchemeError::NotColorable(format!(
            "odd number of noncontractible components on {}",
            d.components[c]
        )));
    }
    Ok(TwoColoring::from_colors(d, d.regions.iter().map(|r| r.color).collect()))
}

/// All separations of RB into two surfaces with common boundary RA: the
/// checkerboard coloring with the colors on components after the first
/// independently exchanged. The first entry is [`two_coloring`].
pub fn separations(d: &RegionDecomposition) -> Result<Vec<TwoColoring>, SchemeError> {
    let base = coloring_of(d)?;
    let extra = d.components.len().saturating_sub(1);
    if extra > 16 {
        return Err(SchemeError::Invariant("too many surface components".into()));
    }
    let mut out = Vec::with_capacity(1 << extra);
    for mask in 0u32..(1 << extra) {
        let colors = d
            .regions
            .iter()
            .zip(&base.colors)
            .map(|(r, &c)| if r.component > 0 && mask >> (r.component - 1) & 1 == 1 { 3 - c } else { c })
            .collect();
        out.push(TwoColoring::from_colors(d, colors));
    }
    Ok(out)
}
