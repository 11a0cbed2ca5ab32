//! The main congruence for `χ(B_j)`, its Addendum, the empty-curve surface
//! congruences and the Guillou–Marin identities behind them.

use super::{brown_value, Condition, CongruenceError, CongruenceReport, PointOutcome, ReportBuilder, BROWN_SIGN};
use crate::model::{CurveClass, SurfaceModel, TypeFlag};
use crate::scheme::TwoColoring;
use crate::zform::BrownValue;

const CHARACTERISTIC: &str = "characteristic type";
const INTEGRAL: &str = "(e_A + chi(RB) - sigma(CB))/4 integral";
const BETA_INFORMATIVE: &str = "Brown invariant informative";

/// `χ(B_j) ≡ e_A/4 + (χ(RB) − σ(CB))/4 + β(q_j) (mod 8)`, with the
/// combined constant evaluated as one fraction.
pub fn theorem1_residue(model: &SurfaceModel, chi_bj: i64, beta: BrownValue) -> CongruenceReport {
    let constant = model.theorem1_constant();
    let b = brown_value(beta);
    let mut r = ReportBuilder::new("theorem1", 8)
        .hypothesis(CHARACTERISTIC, model.characteristic_type.holds)
        .hypothesis(INTEGRAL, constant.is_some())
        .hypothesis(BETA_INFORMATIVE, b.is_some());
    if let (Some(c), Some(b)) = (constant, b) {
        r = r.condition(Condition::new("chi(B_j)", chi_bj, &[c + BROWN_SIGN * b], 8)).value("constant", c);
    }
    r.finish()
}

/// Residue tests of the Addendum for the two colors with constant `c`,
/// Brown invariants `betas` of the colors, deficiency `j` and type flag.
/// Both assignments of `(B1, B2)` to the colors are tried; the returned
/// label names the one reported.
pub fn addendum_residues(
    c: i64,
    chis: [i64; 2],
    betas: [i64; 2],
    j: u32,
    type_flag: TypeFlag,
) -> Option<(Vec<Condition>, bool, bool, &'static str)> {
    let attempts = [(chis, betas, "B1=color1"), ([chis[1], chis[0]], [betas[1], betas[0]], "B1=color2")];
    let mut outcomes: Vec<(PointOutcome, &'static str)> = Vec::new();
    for (chi, beta, label) in attempts {
        if let Some(o) = addendum_points(c, chi, beta, j, type_flag) {
            outcomes.push((o, label));
        }
    }
    let ok = |o: &PointOutcome| !o.contradiction && o.conditions.iter().all(Condition::holds);
    let pick = outcomes
        .iter()
        .position(|(o, _)| ok(o) && !o.forces_type_i)
        .or_else(|| outcomes.iter().position(|(o, _)| ok(o)))
        .unwrap_or(0);
    if outcomes.is_empty() {
        return None;
    }
    let (o, label) = outcomes.swap_remove(pick);
    Some((o.conditions, o.forces_type_i, o.contradiction, label))
}

fn addendum_points(c: i64, chi: [i64; 2], beta: [i64; 2], j: u32, type_flag: TypeFlag) -> Option<PointOutcome> {
    let k = [c + BROWN_SIGN * beta[0], c + BROWN_SIGN * beta[1]];
    let mut out = PointOutcome { conditions: Vec::new(), forces_type_i: false, contradiction: false };
    match j {
        0 => {
            out.conditions.push(Condition::new("a: chi(B1)", chi[0], &[k[0]], 8));
            out.conditions.push(Condition::new("a: chi(B2)", chi[1], &[k[1]], 8));
        }
        1 => {
            let signed = |eps: i64| {
                [
                    Condition::new("b: chi(B1)", chi[0], &[k[0] + eps], 8),
                    Condition::new("b: chi(B2)", chi[1], &[k[1] - eps], 8),
                ]
            };
            let plus = signed(1);
            let chosen = if plus.iter().all(Condition::holds) { plus } else { signed(-1) };
            let chosen = if chosen.iter().all(Condition::holds) { chosen } else { signed(1) };
            out.conditions.extend(chosen);
        }
        2 => {
            let triggered = (0..2).any(|i| (chi[i] - k[i] - 4).rem_euclid(8) == 0);
            if triggered {
                out.forces_type_i = true;
                out.contradiction = type_flag == TypeFlag::II;
            } else {
                for i in 0..2 {
                    let allowed: Vec<i64> = (0..8).filter(|&r| r != (k[i] + 4).rem_euclid(8)).collect();
                    out.conditions.push(Condition::new(&format!("c: chi(B{})", i + 1), chi[i], &allowed, 8));
                }
            }
        }
        _ => {}
    }
    if type_flag == TypeFlag::I || out.forces_type_i {
        out.conditions.push(Condition::new("d: chi(B1)", chi[0], &[k[0]], 4));
        out.conditions.push(Condition::new("d: chi(B2)", chi[1], &[k[1]], 4));
    }
    if out.conditions.is_empty() && !out.forces_type_i {
        return None;
    }
    Some(out)
}

/// The Addendum for a separation of RB by the curve. `betas` are the
/// Brown invariants of the form restricted to each color; `q_vanishes_on_ra`
/// records whether the Guillou–Marin form vanishes on the curve.
pub fn addendum_filter(
    model: &SurfaceModel,
    coloring: &TwoColoring,
    curve: &CurveClass,
    betas: [BrownValue; 2],
    q_vanishes_on_ra: bool,
) -> CongruenceReport {
    let constant = model.theorem1_constant();
    let b = [brown_value(betas[0]), brown_value(betas[1])];
    let mut r = ReportBuilder::new("addendum", 8)
        .hypothesis(CHARACTERISTIC, model.characteristic_type.holds)
        .hypothesis(INTEGRAL, constant.is_some())
        .hypothesis("q_j vanishes on H1(RA)", q_vanishes_on_ra)
        .hypothesis(BETA_INFORMATIVE, b[0].is_some() && b[1].is_some())
        .hypothesis("deficiency known", curve.deficiency.is_some());
    if let (Some(c), [Some(b1), Some(b2)], Some(j)) = (constant, b, curve.deficiency) {
        r = r.value("constant", c).value("j", i64::from(j));
        match addendum_residues(c, [coloring.chi1, coloring.chi2], [b1, b2], j, curve.type_flag) {
            Some((conds, forces, contradiction, label)) => {
                r = r.conditions(conds).forces_type_i(forces).contradiction(contradiction).assignment(label);
            }
            None => r = r.hypothesis("a point of the addendum applies", false),
        }
    }
    r.finish()
}

/// Empty-curve congruences: `χ(RB) ≡ σ(CB)` mod 8, and mod 32 when one
/// surface of the complex separation is empty.
pub fn surface_congruence(model: &SurfaceModel) -> Vec<CongruenceReport> {
    let one_sided =
        model.is_connected() || model.empty_separation.as_ref().map(|s| s.iter().all(|&c| c == s[0])).unwrap_or(false);
    let hyp = "Dw2(CB) = [RB]";
    let mod8 = ReportBuilder::new("surface-mod8", 8)
        .hypothesis(hyp, model.surface_characteristic)
        .condition(Condition::new("chi(RB)", model.chi_rb, &[model.sigma_cb], 8))
        .finish();
    let mod32 = ReportBuilder::new("surface-mod32", 32)
        .hypothesis(hyp, model.surface_characteristic)
        .hypothesis("some B_j empty", one_sided)
        .condition(Condition::new("chi(RB)", model.chi_rb, &[model.sigma_cb], 32))
        .finish();
    vec![mod8, mod32]
}

/// `σ(CB/conj) ≡ W∘W + 2β (mod 16)` for a characteristic surface `W`.
pub fn guillou_marin_check(sigma_quotient: i64, self_intersection: i64, beta: BrownValue) -> CongruenceReport {
    let b = brown_value(beta);
    let mut r = ReportBuilder::new("guillou-marin", 16).hypothesis(BETA_INFORMATIVE, b.is_some());
    if let Some(b) = b {
        r = r.condition(Condition::new(
            "sigma(CB/conj)",
            sigma_quotient,
            &[self_intersection + 2 * BROWN_SIGN * b],
            16,
        ));
    }
    r.finish()
}

/// `σ(CB/conj) = (σ(CB) − χ(RB)) / 2`.
pub fn ash_signature(sigma_cb: i64, chi_rb: i64) -> Result<i64, CongruenceError> {
    let diff = sigma_cb - chi_rb;
    if diff % 2 != 0 {
        return Err(CongruenceError::Parity(diff));
    }
    Ok(diff / 2)
}
