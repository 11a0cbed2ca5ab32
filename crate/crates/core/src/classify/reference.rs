//! Published classification lists the drivers are compared against.

/// Schemes of flexible curves of bidegree (3, 3) on the ellipsoid:
/// `1<1<1>>` and `α ⊔ 1<β>` with `α > β` and `α + β ≤ 4`.
pub fn ellipsoid33_listed() -> Vec<String> {
    let mut out = vec!["1<1<1>>".to_string()];
    for beta in 0..=4u32 {
        for alpha in (beta + 1)..=(4 - beta) {
            out.push(if beta == 0 { format!("{}", alpha + 1) } else { format!("{alpha}u1<{beta}>") });
        }
    }
    out
}

/// Bidegree (3, 3) schemes left open by the Harnack and Bezout arguments
/// and closed by the ellipsoid congruence.
pub fn ellipsoid33_restricted() -> Vec<String> {
    ["2u1<2>", "3u1<1>", "2u1<1>"].map(String::from).to_vec()
}

/// M-schemes of degree 2 curves on the cubic `RP² ⊔ S²`.
pub fn cubic_listed() -> Vec<String> {
    let mut out = vec!["@rp2(3u1<1>)u@s2(0)".to_string(), "@rp2(1<4>)u@s2(0)".to_string()];
    for alpha in 0..=5 {
        out.push(format!("@rp2({alpha})u@s2({})", 5 - alpha));
    }
    out
}

/// The two (5, 5) M-schemes named as unrestricted and unconstructed.
pub fn m55_named() -> Vec<String> {
    ["1u1<6>u1<8>", "1u1<5>u1<9>"].map(String::from).to_vec()
}

/// Published number of unrestricted (5, 5) M-schemes. It relies on
/// restrictions beyond the congruences and is reported, not enforced.
pub const M55_REFERENCE_COUNT: usize = 18;
