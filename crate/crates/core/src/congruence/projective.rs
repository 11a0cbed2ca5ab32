//! Congruences for curves cut on a complete intersection by one more
//! hypersurface of even degree `m_s`, with `B₊ = {P_s ≥ 0}`.

use serde::{Deserialize, Serialize};

use super::{single_surface_points, CongruenceReport, ReportBuilder};
use crate::model::{ci_normal_euler, CurveClass, SurfaceModel, SurfaceType};

/// Homological data of the pair `(RB, B₊)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveHypotheses {
    /// Rank of `H₁(B₊) → H₁(RB)` over Z2.
    pub d_rank: u32,
    /// Rank of `H₁(RA) → H₁(RB)` over Z2.
    pub e_rank: u32,
    /// Components of RB noncontractible in the ambient projective space
    /// and disjoint from RA.
    pub c_count: u32,
    pub in_one_component: bool,
    pub in_one_separation_surface: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectiveMode {
    Classical,
    Generalized,
}

/// Checks `χ(B₊)` against `C = m₁⋯m_{s−1}m_s²/4`. The classical form needs
/// an M-surface and, when `m_s ≡ 0 (mod 4)`, `c = 0`; the generalized form
/// needs type I-abs or I-rel according to the parity of `m₁ + ⋯ + m_{s−1}`
/// (shifted by `s`, which only matters off `P³`) and, when `m_s ≡ 2 (mod 4)`, `c = 0`.
pub fn projective_check(
    model: &SurfaceModel,
    hyp: &ProjectiveHypotheses,
    curve: &CurveClass,
    chi_bplus: i64,
    mode: ProjectiveMode,
) -> CongruenceReport {
    let theorem = match mode {
        ProjectiveMode::Classical => "projective-classical",
        ProjectiveMode::Generalized => "projective-generalized",
    };
    let degrees = model.ci_degrees().filter(|m| !m.is_empty());
    let mut b = ReportBuilder::new(theorem, 8).hypothesis("complete intersection", degrees.is_some());
    let Some(degrees) = degrees else {
        return b.finish();
    };
    let m_s = *degrees.last().expect("nonempty degrees");
    let constant = ci_normal_euler(&degrees);
    b = b
        .hypothesis("RA nonempty", curve.component_count > 0)
        .hypothesis("m_s even", m_s % 2 == 0)
        .hypothesis("e = 0", hyp.e_rank == 0);
    match mode {
        ProjectiveMode::Classical => {
            b = b
                .hypothesis("M-surface", model.m_surface == Some(true))
                .hypothesis("B+ in one component", hyp.in_one_component)
                .hypothesis("c-condition", m_s % 4 != 0 || hyp.c_count == 0);
        }
        ProjectiveMode::Generalized => {
            // w2 of the surface is (m_1 + ... + m_{s-1} + s) times the hyperplane class
            let rest: u32 = degrees[..degrees.len() - 1].iter().sum::<u32>() + degrees.len() as u32;
            let want = if rest.is_multiple_of(2) { SurfaceType::Abs } else { SurfaceType::Rel };
            b = b
                .hypothesis(&format!("surface of type {}", want.name()), model.surface_type == Some(want))
                .hypothesis("B+ in one separation surface", hyp.in_one_separation_surface)
                .hypothesis("c-condition", m_s % 4 != 2 || hyp.c_count == 0);
        }
    }
    b = b.hypothesis("deficiency known", curve.deficiency.is_some());
    if constant % 4 != 0 || m_s % 2 != 0 {
        return b.finish();
    }
    let Some(k) = curve.deficiency else {
        return b.finish();
    };
    let c = constant / 4;
    let dk = hyp.d_rank + k;
    b = b.value("constant", c).value("d+k", i64::from(dk));
    let full = mode == ProjectiveMode::Generalized;
    // the mod 4 point is stated for B+ with trivial image in H1(RB)
    let k0 = (hyp.d_rank == 0).then_some(c);
    match single_surface_points("chi(B+)", chi_bplus, c, k0, dk, curve.type_flag, full) {
        Some(o) => b.conditions(o.conditions).forces_type_i(o.forces_type_i).contradiction(o.contradiction).finish(),
        None => b.hypothesis("a point of the theorem applies", false).finish(),
    }
}
