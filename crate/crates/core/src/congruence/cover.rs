//! Complex separation and form values for a double covering branched along
//! an oriented curve. `X₋` contains the base region; `X₊` is the union of
//! the regions an odd number of curve components away from it.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::model::SurfaceModel;
use crate::scheme::{regions, RealScheme, RegionDecomposition, SchemeError};
use crate::zform::Z4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("complex semiorientation required: the scheme is unoriented")]
    Unoriented,
    #[error("no region {0}")]
    BadRegion(usize),
    #[error("no curve component {0}")]
    BadCircle(usize),
    #[error("region {0} of X+ is nonorientable; the covering cannot satisfy Dw2 = [RB]")]
    NonorientableComponent(usize),
    #[error("region {0} does not lie in X-")]
    NotInXMinus(usize),
    #[error("curve component {circle} does not bound region {region}")]
    NotOnBoundary { circle: usize, region: usize },
    #[error("surface is not checkerboard colorable")]
    NotColorable,
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// Boundary circles of one region of `X₊` with their separation classes;
/// class 0 is the class of the first circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverComponent {
    pub region: usize,
    pub circles: Vec<usize>,
    pub classes: Vec<u8>,
}

fn in_x_plus(d: &RegionDecomposition, x_inf: usize, region: usize) -> bool {
    d.regions[region].color != d.regions[x_inf].color
}

fn check_base(d: &RegionDecomposition, x_inf: usize) -> Result<(), CoverError> {
    if x_inf >= d.regions.len() {
        return Err(CoverError::BadRegion(x_inf));
    }
    if !d.is_colorable() {
        return Err(CoverError::NotColorable);
    }
    Ok(())
}

/// Circles of `∂C` lie in the same class iff the orientation induced by the
/// complex semiorientation agrees with the boundary orientation of `C` on
/// both or on neither. An oval agrees with a region inside it when its sign
/// is `+` and with a region outside it when its sign is `−`.
pub fn cover_separation(
    s: &RealScheme,
    model: &SurfaceModel,
    x_inf: usize,
) -> Result<(Vec<CoverComponent>, RegionDecomposition), CoverError> {
    if s.curve_component_count() > 0 && !s.is_oriented() {
        return Err(CoverError::Unoriented);
    }
    let d = regions(s, model)?;
    check_base(&d, x_inf)?;
    let mut out = Vec::new();
    for (id, region) in d.regions.iter().enumerate() {
        if !in_x_plus(&d, x_inf, id) {
            continue;
        }
        if !region.orientable {
            return Err(CoverError::NonorientableComponent(id));
        }
        let agree: Vec<bool> = region
            .boundary
            .iter()
            .map(|&c| {
                let circle = &d.circles[c];
                let plus = circle.sign.map(|s| s.value() > 0).unwrap_or(true);
                if circle.inside == id {
                    plus
                } else {
                    !plus
                }
            })
            .collect();
        let first = agree.first().copied().unwrap_or(true);
        out.push(CoverComponent {
            region: id,
            circles: region.boundary.clone(),
            classes: agree.iter().map(|&a| u8::from(a != first)).collect(),
        });
    }
    Ok((out, d))
}

/// `q(λ) ≡ 2χ(G ∩ X₊) (mod 4)` for a loop whose projection bounds the union
/// `G` of regions.
pub fn viro_loop_value(g: &BTreeSet<usize>, d: &RegionDecomposition, x_inf: usize) -> Result<Z4, CoverError> {
    check_base(d, x_inf)?;
    let mut chi = 0;
    for &r in g {
        if r >= d.regions.len() {
            return Err(CoverError::BadRegion(r));
        }
        if in_x_plus(d, x_inf, r) {
            chi += d.regions[r].chi;
        }
    }
    Ok(Z4::new(2 * chi))
}

/// Value of the form on the lift of a path inside the `X₋` region
/// `region` from curve component `alpha` to `beta`: 0 when the path meets
/// them with opposite intersection signs, 2 otherwise.
pub fn viro_path_value(
    s: &RealScheme,
    model: &SurfaceModel,
    x_inf: usize,
    region: usize,
    alpha: usize,
    beta: usize,
) -> Result<Z4, CoverError> {
    if s.curve_component_count() > 0 && !s.is_oriented() {
        return Err(CoverError::Unoriented);
    }
    let d = regions(s, model)?;
    check_base(&d, x_inf)?;
    if region >= d.regions.len() {
        return Err(CoverError::BadRegion(region));
    }
    if in_x_plus(&d, x_inf, region) {
        return Err(CoverError::NotInXMinus(region));
    }
    for c in [alpha, beta] {
        if c >= d.circles.len() {
            return Err(CoverError::BadCircle(c));
        }
        if !d.regions[region].boundary.contains(&c) {
            return Err(CoverError::NotOnBoundary { circle: c, region });
        }
    }
    if alpha == beta {
        return Ok(Z4::new(0));
    }
    let sign = |c: usize| d.circles[c].sign.map(|s| s.value()).unwrap_or(1);
    let inside = |c: usize| d.circles[c].inside == region;
    // leaving through alpha, arriving through beta
    let at_alpha = if inside(alpha) { sign(alpha) } else { -sign(alpha) };
    let at_beta = if inside(beta) { -sign(beta) } else { sign(beta) };
    Ok(Z4::new(if at_alpha != at_beta { 0 } else { 2 }))
}
