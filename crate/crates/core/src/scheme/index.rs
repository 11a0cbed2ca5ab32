//! Index functions of oriented curves and their Euler-characteristic
//! integrals.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use super::{RealScheme, RegionDecomposition, SchemeError};
use crate::model::SurfaceModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Ring {
    Z,
    Z2,
    Z4,
    Z8,
}

impl Ring {
    /// 0 for the integers.
    pub fn modulus(self) -> i64 {
        match self {
            Ring::Z => 0,
            Ring::Z2 => 2,
            Ring::Z4 => 4,
            Ring::Z8 => 8,
        }
    }

    pub fn reduce(self, v: i64) -> i64 {
        match self.modulus() {
            0 => v,
            m => v.rem_euclid(m),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::Z => "Z",
            Ring::Z2 => "Z2",
            Ring::Z4 => "Z4",
            Ring::Z8 => "Z8",
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" => Ok(Ring::Z),
            "Z2" => Ok(Ring::Z2),
            "Z4" => Ok(Ring::Z4),
            "Z8" => Ok(Ring::Z8),
            other => Err(format!("unknown ring '{other}'")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index function needs an oriented scheme")]
    Unoriented,
    #[error("index function is defined on a connected surface only")]
    Disconnected,
    #[error("no region {0}")]
    BadRegion(usize),
    #[error("the complement of the base region is not orientable")]
    NonorientableComplement,
    #[error("ind over {ring} is undefined: {count} noncontractible components, need a multiple of {need}")]
    Undefined { ring: &'static str, count: usize, need: i64 },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexFunction {
    pub ring: Ring,
    pub base: usize,
    /// Per region; exact over Z, otherwise a representative in `0..m`.
    pub values: Vec<i64>,
}

/// `ind_R` relative to the base region `x_inf` (region 0 when `None`): the
/// value jumps by the sign of the curve component crossed towards its
/// inside.
pub fn index_function(
    scheme: &RealScheme,
    model: &SurfaceModel,
    ring: Ring,
    x_inf: Option<usize>,
) -> Result<(IndexFunction, RegionDecomposition), IndexError> {
    if !scheme.is_oriented() && scheme.curve_component_count() > 0 {
        return Err(IndexError::Unoriented);
    }
    let d = super::regions(scheme, model)?;
    if d.components.len() != 1 {
        return Err(IndexError::Disconnected);
    }
    let base = x_inf.unwrap_or(0);
    if base >= d.regions.len() {
        return Err(IndexError::BadRegion(base));
    }
    if d.regions.iter().enumerate().any(|(i, r)| i != base && !r.orientable) {
        return Err(IndexError::NonorientableComplement);
    }
    let l = d.circles.iter().filter(|c| c.noncontractible).count();
    if l > 0 {
        let need = ring.modulus();
        let ok = if need == 0 { false } else { l as i64 % need == 0 };
        if !ok {
            return Err(IndexError::Undefined { ring: ring.name(), count: l, need });
        }
    }
    let values = propagate(&d, base, ring);
    Ok((IndexFunction { ring, base, values }, d))
}

fn propagate(d: &RegionDecomposition, base: usize, ring: Ring) -> Vec<i64> {
    let mut values: Vec<Option<i64>> = vec![None; d.regions.len()];
    values[base] = Some(0);
    let mut queue = VecDeque::from([base]);
    while let Some(r) = queue.pop_front() {
        let v = values[r].unwrap_or(0);
        for &c in &d.regions[r].boundary {
            let circle = &d.circles[c];
            let s = circle.sign.map(|s| s.value()).unwrap_or(0);
            let (next, jump) = if circle.outside == r { (circle.inside, s) } else { (circle.outside, -s) };
            if values[next].is_none() {
                values[next] = Some(ring.reduce(v + jump));
                queue.push_back(next);
            }
        }
    }
    values.into_iter().map(|v| v.unwrap_or(0)).collect()
}

/// Exact over Z; over `Z_m` the square of a class is well defined modulo
/// `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntegralValue {
    pub value: i64,
    /// `None` for an exact integer.
    pub modulus: Option<i64>,
}

/// `∫ f² dχ = Σ f(R)² χ(R)` over the regions.
pub fn euler_integral_sq(f: &IndexFunction, d: &RegionDecomposition) -> IntegralValue {
    let total: i64 = f.values.iter().zip(&d.regions).map(|(v, r)| v * v * r.chi).sum();
    match f.ring.modulus() {
        0 => IntegralValue { value: total, modulus: None },
        m => IntegralValue { value: total.rem_euclid(2 * m), modulus: Some(2 * m) },
    }
}

impl RegionDecomposition {
    /// Copy with the index values attached to the regions.
    pub fn with_index(&self, f: &IndexFunction) -> RegionDecomposition {
        let mut out = self.clone();
        for (r, &v) in out.regions.iter_mut().zip(&f.values) {
            r.index = Some(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::parse_scheme;

    fn ind(s: &str, model: &SurfaceModel, ring: Ring) -> Result<(Vec<i64>, IntegralValue), IndexError> {
        let (f, d) = index_function(&parse_scheme(s).unwrap(), model, ring, None)?;
        let i = euler_integral_sq(&f, &d);
        Ok((f.values, i))
    }

    #[test]
    fn jumps() {
        let e = SurfaceModel::ellipsoid(3).unwrap();
        assert_eq!(ind("1+", &e, Ring::Z).unwrap().0, vec![0, 1]);
        assert_eq!(ind("1-", &e, Ring::Z).unwrap().0, vec![0, -1]);
        assert_eq!(ind("1-", &e, Ring::Z4).unwrap().0, vec![0, 3]);
        let p = SurfaceModel::plane(4).unwrap();
        assert_eq!(ind("1+<1+>", &p, Ring::Z).unwrap().0, vec![0, 1, 2]);
    }

    #[test]
    fn plane_integrals() {
        let p2 = SurfaceModel::plane(2).unwrap();
        let p4 = SurfaceModel::plane(4).unwrap();
        assert_eq!(ind("0", &p2, Ring::Z).unwrap().1.value, 0);
        assert_eq!(ind("1+", &p2, Ring::Z).unwrap().1.value, 1);
        assert_eq!(ind("1+<1+>", &p4, Ring::Z).unwrap().1.value, 4);
        assert_eq!(ind("1+<1->", &p4, Ring::Z).unwrap().1.value, 0);
    }

    #[test]
    fn errors() {
        let e = SurfaceModel::ellipsoid(3).unwrap();
        assert_eq!(ind("2", &e, Ring::Z).unwrap_err(), IndexError::Unoriented);
        let p = SurfaceModel::plane(2).unwrap();
        let (_, d) = index_function(&parse_scheme("1+").unwrap(), &p, Ring::Z, None).unwrap();
        assert_eq!(d.regions.len(), 2);
        assert_eq!(
            index_function(&parse_scheme("1+").unwrap(), &p, Ring::Z, Some(1)).unwrap_err(),
            IndexError::NonorientableComplement
        );
        let t = SurfaceModel::hyperboloid(2, 2).unwrap();
        assert!(matches!(ind("nc(2,1,0)+{0|0}", &t, Ring::Z), Err(IndexError::Undefined { .. })));
        assert!(matches!(ind("nc(2,1,0)+{0|0}", &t, Ring::Z4), Err(IndexError::Undefined { .. })));
        assert!(ind("nc(2,1,0)+{0|0}", &t, Ring::Z2).is_ok());
        assert!(ind("nc(4,1,0)+{0|0|0|0}", &t, Ring::Z4).is_ok());
        assert!(ind("nc(4,1,0)+{0|0|0|0}", &t, Ring::Z8).is_err());
    }

    #[test]
    fn torus_family_values() {
        let t = SurfaceModel::hyperboloid(2, 2).unwrap();
        let (v, _) = ind("nc(4,1,0)+{1+|0|0|0}", &t, Ring::Z4).unwrap();
        // slots 0..3 then the oval in slot 0
        assert_eq!(v, vec![0, 1, 2, 3, 1]);
    }
}
