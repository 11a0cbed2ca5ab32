//! Ambient surfaces and curve classes: the certified constants every
//! congruence consumes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scheme::RealScheme;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("invalid model parameters: {0}")]
    Parameters(String),
    #[error("curve class inconsistent with the model: {0}")]
    CurveClass(String),
}

/// Topological type of one component of the real surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Carrier {
    Sphere,
    ProjectivePlane,
    Torus,
    Other { chi: i64, orientable: bool },
}

impl Carrier {
    pub fn chi(self) -> i64 {
        match self {
            Carrier::Sphere => 2,
            Carrier::ProjectivePlane => 1,
            Carrier::Torus => 0,
            Carrier::Other { chi, .. } => chi,
        }
    }

    pub fn orientable(self) -> bool {
        match self {
            Carrier::Sphere | Carrier::Torus => true,
            Carrier::ProjectivePlane => false,
            Carrier::Other { orientable, .. } => orientable,
        }
    }

    pub fn default_tag(self) -> &'static str {
        match self {
            Carrier::Sphere => "s2",
            Carrier::ProjectivePlane => "rp2",
            Carrier::Torus => "t2",
            Carrier::Other { .. } => "comp1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceComponent {
    pub tag: String,
    pub carrier: Carrier,
    /// The component is not null-homotopic in the ambient projective space.
    pub noncontractible_in_ambient: bool,
}

impl SurfaceComponent {
    pub fn new(tag: &str, carrier: Carrier) -> Self {
        SurfaceComponent {
            tag: tag.to_string(),
            carrier,
            noncontractible_in_ambient: carrier == Carrier::ProjectivePlane,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Plane,
    PlaneDoubleCover,
    Ellipsoid,
    Hyperboloid,
    CubicM,
    CubicDisjoint,
    CompleteIntersection,
    Custom,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Plane => "plane",
            ModelKind::PlaneDoubleCover => "plane-double-cover",
            ModelKind::Ellipsoid => "ellipsoid",
            ModelKind::Hyperboloid => "hyperboloid",
            ModelKind::CubicM => "cubic-M",
            ModelKind::CubicDisjoint => "cubic-disjoint",
            ModelKind::CompleteIntersection => "complete-intersection",
            ModelKind::Custom => "custom",
        }
    }
}

/// Whether the real surface is Z2-homologous to zero in the complex surface
/// (`Abs`) or only modulo the class of a hyperplane section (`Rel`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceType {
    #[serde(rename = "I-abs")]
    Abs,
    #[serde(rename = "I-rel")]
    Rel,
}

impl SurfaceType {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceType::Abs => "I-abs",
            SurfaceType::Rel => "I-rel",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicType {
    pub holds: bool,
    pub justification: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degrees {
    None,
    Plane(u32),
    Bidegree(u32, u32),
    CompleteIntersection(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub kind: ModelKind,
    pub chi_rb: i64,
    pub sigma_cb: i64,
    pub e_a: i64,
    pub e_rb: i64,
    pub degrees: Degrees,
    pub components: Vec<SurfaceComponent>,
    /// Whether `[RB] + [CA]` is dual to `w2(CB)` for the curves under study.
    pub characteristic_type: CharacteristicType,
    /// Whether `[RB]` alone is characteristic (needed by the empty-curve
    /// congruences).
    pub surface_characteristic: bool,
    pub m_surface: Option<bool>,
    pub surface_type: Option<SurfaceType>,
    /// Harnack bound: genus of the curve plus one.
    pub m_count: Option<u32>,
    /// Color (1 or 2) of each component in the complex separation of RB
    /// cut out by the empty curve, when known.
    pub empty_separation: Option<Vec<u8>>,
}

impl SurfaceModel {
    /// Curves of bidegree `(d, d)` on the ellipsoid `S²`.
    pub fn ellipsoid(d: u32) -> Result<Self, ModelError> {
        if d == 0 {
            return Err(ModelError::Parameters("degree must be positive".into()));
        }
        let d64 = i64::from(d);
        let odd = d % 2 == 1;
        Ok(SurfaceModel {
            kind: ModelKind::Ellipsoid,
            chi_rb: 2,
            sigma_cb: 0,
            e_a: 2 * d64 * d64,
            e_rb: -2,
            degrees: Degrees::Bidegree(d, d),
            components: vec![SurfaceComponent::new("s2", Carrier::Sphere)],
            characteristic_type: CharacteristicType {
                holds: odd,
                justification: if odd {
                    "ellipsoid is of type I-rel and the degree is odd".into()
                } else {
                    "even degree: [CA] is even and RB is not characteristic".into()
                },
            },
            surface_characteristic: false,
            m_surface: Some(true),
            surface_type: Some(SurfaceType::Rel),
            m_count: Some((d - 1) * (d - 1) + 1),
            empty_separation: Some(vec![1]),
        })
    }

    /// Curves of bidegree `(d, r)` on the hyperboloid `T²`.
    pub fn hyperboloid(d: u32, r: u32) -> Result<Self, ModelError> {
        if d == 0 || r == 0 {
            return Err(ModelError::Parameters("bidegree entries must be positive".into()));
        }
        let even = d.is_multiple_of(2) && r.is_multiple_of(2);
        Ok(SurfaceModel {
            kind: ModelKind::Hyperboloid,
            chi_rb: 0,
            sigma_cb: 0,
            e_a: 2 * i64::from(d) * i64::from(r),
            e_rb: 0,
            degrees: Degrees::Bidegree(d, r),
            components: vec![SurfaceComponent::new("t2", Carrier::Torus)],
            characteristic_type: CharacteristicType {
                holds: even,
                justification: if even {
                    "even bidegree: [RB] + [CA] is characteristic when the curve is Z4-null-homologous (l' = 0 mod 4)"
                        .into()
                } else {
                    "odd bidegree entry".into()
                },
            },
            surface_characteristic: true,
            m_surface: Some(true),
            surface_type: Some(SurfaceType::Abs),
            m_count: Some((d - 1) * (r - 1) + 1),
            empty_separation: Some(vec![1]),
        })
    }

    /// Curves of degree `m` in the real projective plane.
    pub fn plane(m: u32) -> Result<Self, ModelError> {
        if m == 0 {
            return Err(ModelError::Parameters("degree must be positive".into()));
        }
        let m64 = i64::from(m);
        let even = m.is_multiple_of(2);
        Ok(SurfaceModel {
            kind: ModelKind::Plane,
            chi_rb: 1,
            sigma_cb: 1,
            e_a: m64 * m64,
            e_rb: -1,
            degrees: Degrees::Plane(m),
            components: vec![SurfaceComponent::new("rp2", Carrier::ProjectivePlane)],
            characteristic_type: CharacteristicType {
                holds: even,
                justification: if even {
                    "even degree: [RP2] + [CA] is dual to w2(CP2)".into()
                } else {
                    "odd degree".into()
                },
            },
            surface_characteristic: true,
            m_surface: Some(true),
            surface_type: Some(SurfaceType::Rel),
            m_count: Some((m - 1) * (m - 2) / 2 + 1),
            empty_separation: Some(vec![1]),
        })
    }

    /// Double plane branched along a curve of degree `2k`; `chi_rb` is the
    /// Euler characteristic of the real part of the cover.
    pub fn plane_double_cover(k: u32, chi_rb: i64) -> Result<Self, ModelError> {
        if k == 0 {
            return Err(ModelError::Parameters("k must be positive".into()));
        }
        let k64 = i64::from(k);
        Ok(SurfaceModel {
            kind: ModelKind::PlaneDoubleCover,
            chi_rb,
            sigma_cb: 2 - 2 * k64 * k64,
            e_a: 0,
            e_rb: -chi_rb,
            degrees: Degrees::Plane(2 * k),
            components: vec![SurfaceComponent::new("comp1", Carrier::Other { chi: chi_rb, orientable: true })],
            characteristic_type: CharacteristicType {
                holds: true,
                justification: "double plane of a type I curve, empty curve upstairs".into(),
            },
            surface_characteristic: true,
            m_surface: None,
            surface_type: None,
            m_count: None,
            empty_separation: None,
        })
    }

    /// Cubic surface whose real part is `RP² ⊔ S²`, with curves cut by
    /// quadrics (complete intersection of degrees (3, 2)).
    pub fn cubic_disjoint() -> Self {
        SurfaceModel {
            kind: ModelKind::CubicDisjoint,
            chi_rb: 3,
            sigma_cb: -5,
            e_a: 12,
            e_rb: -3,
            degrees: Degrees::CompleteIntersection(vec![3, 2]),
            components: vec![
                SurfaceComponent::new("rp2", Carrier::ProjectivePlane),
                SurfaceComponent::new("s2", Carrier::Sphere),
            ],
            characteristic_type: CharacteristicType {
                holds: true,
                justification: "complete intersection of degrees (3, 2), cubic of type I-rel".into(),
            },
            surface_characteristic: true,
            m_surface: Some(false),
            surface_type: Some(SurfaceType::Rel),
            m_count: Some(5),
            empty_separation: Some(vec![1, 2]),
        }
    }

    /// Cubic M-surface, real part `#7 RP²`, with curves cut by quadrics.
    pub fn cubic_m() -> Self {
        SurfaceModel {
            kind: ModelKind::CubicM,
            chi_rb: -5,
            sigma_cb: -5,
            e_a: 12,
            e_rb: 5,
            degrees: Degrees::CompleteIntersection(vec![3, 2]),
            components: vec![SurfaceComponent {
                tag: "comp1".into(),
                carrier: Carrier::Other { chi: -5, orientable: false },
                noncontractible_in_ambient: true,
            }],
            characteristic_type: CharacteristicType {
                holds: true,
                justification: "complete intersection of degrees (3, 2) on an M-cubic".into(),
            },
            surface_characteristic: true,
            m_surface: Some(true),
            surface_type: Some(SurfaceType::Rel),
            m_count: Some(5),
            empty_separation: Some(vec![1]),
        }
    }

    /// Curve cut on a complete intersection surface of degrees
    /// `m_1, ..., m_{s-1}` by a hypersurface of degree `m_s`. The caller
    /// supplies the constants that cannot be derived from degrees alone.
    pub fn complete_intersection(
        degrees: Vec<u32>,
        chi_rb: i64,
        sigma_cb: i64,
        components: Vec<SurfaceComponent>,
        surface_type: Option<SurfaceType>,
        m_surface: Option<bool>,
    ) -> Result<Self, ModelError> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(ModelError::Parameters("degrees must be a nonempty list of positive integers".into()));
        }
        if components.is_empty() {
            return Err(ModelError::Parameters("at least one surface component is required".into()));
        }
        let sum: i64 = components.iter().map(|c| c.carrier.chi()).sum();
        if sum != chi_rb {
            return Err(ModelError::Parameters(format!(
                "component Euler characteristics sum to {sum}, expected {chi_rb}"
            )));
        }
        let e_a = ci_normal_euler(&degrees);
        let m_count = ci_genus(&degrees).map(|g| g + 1);
        Ok(SurfaceModel {
            kind: ModelKind::CompleteIntersection,
            chi_rb,
            sigma_cb,
            e_a,
            e_rb: -chi_rb,
            degrees: Degrees::CompleteIntersection(degrees),
            components,
            characteristic_type: CharacteristicType {
                holds: surface_type.is_some(),
                justification: "supplied surface type".into(),
            },
            surface_characteristic: false,
            m_surface,
            surface_type,
            m_count,
            empty_separation: None,
        })
    }

    /// Bare numeric model for the empty-curve congruences.
    pub fn custom(chi_rb: i64, sigma_cb: i64, connected: bool) -> Self {
        let components = if connected {
            vec![SurfaceComponent::new("comp1", Carrier::Other { chi: chi_rb, orientable: true })]
        } else {
            vec![
                SurfaceComponent::new("comp1", Carrier::Other { chi: chi_rb, orientable: true }),
                SurfaceComponent::new("comp2", Carrier::Other { chi: 0, orientable: true }),
            ]
        };
        SurfaceModel {
            kind: ModelKind::Custom,
            chi_rb,
            sigma_cb,
            e_a: 0,
            e_rb: -chi_rb,
            degrees: Degrees::None,
            components,
            characteristic_type: CharacteristicType { holds: true, justification: "supplied".into() },
            surface_characteristic: true,
            m_surface: None,
            surface_type: None,
            m_count: None,
            empty_separation: if connected { Some(vec![1]) } else { None },
        }
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Complete-intersection degrees `m_1, ..., m_s` when the model is one.
    pub fn ci_degrees(&self) -> Option<Vec<u32>> {
        match (&self.degrees, self.kind) {
            (Degrees::CompleteIntersection(m), _) => Some(m.clone()),
            (Degrees::Plane(m), ModelKind::Plane) => Some(vec![*m]),
            (Degrees::Bidegree(d, r), ModelKind::Ellipsoid) if d == r => Some(vec![2, *d]),
            _ => None,
        }
    }

    /// `4 (e_A/4 + (χ(RB) − σ(CB))/4) = e_A + χ(RB) − σ(CB)`.
    pub fn theorem1_numerator(&self) -> i64 {
        self.e_a + self.chi_rb - self.sigma_cb
    }

    /// The combined constant `e_A/4 + (χ(RB) − σ(CB))/4`, when integral.
    pub fn theorem1_constant(&self) -> Option<i64> {
        let n = self.theorem1_numerator();
        (n % 4 == 0).then_some(n / 4)
    }
}

/// `m_1 ⋯ m_{s−1} m_s²`.
pub fn ci_normal_euler(degrees: &[u32]) -> i64 {
    let prod: i64 = degrees.iter().map(|&m| i64::from(m)).product();
    prod * i64::from(*degrees.last().unwrap_or(&1))
}

/// Genus of a complete-intersection curve in `P^{s+1}` cut by
/// hypersurfaces of the given degrees, by adjunction.
pub fn ci_genus(degrees: &[u32]) -> Option<u32> {
    let s = degrees.len() as i64;
    let deg: i64 = degrees.iter().map(|&m| i64::from(m)).product();
    let sum: i64 = degrees.iter().map(|&m| i64::from(m)).sum();
    let two_g_minus_two = deg * (sum - s - 2);
    let g = two_g_minus_two / 2 + 1;
    (two_g_minus_two % 2 == 0 && g >= 0).then_some(g as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TypeFlag {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
    #[serde(rename = "unknown")]
    Unknown,
}

/// Which class of curves a check is run for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassSelector {
    M,
    MMinus1,
    MMinus2,
    TypeI,
    /// Deficiency from the component count and the Harnack bound.
    Auto,
}

impl std::str::FromStr for ClassSelector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M" => Ok(ClassSelector::M),
            "M-1" => Ok(ClassSelector::MMinus1),
            "M-2" => Ok(ClassSelector::MMinus2),
            "typeI" => Ok(ClassSelector::TypeI),
            "auto" => Ok(ClassSelector::Auto),
            other => Err(format!("unknown curve class '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    /// `j` in "(M−j)-curve"; `None` when unknown.
    pub deficiency: Option<u32>,
    pub type_flag: TypeFlag,
    pub component_count: u32,
    /// Curve component ids that are disorienting in CA.
    pub disorienting: Vec<usize>,
}

impl CurveClass {
    pub fn new(deficiency: Option<u32>, type_flag: TypeFlag, component_count: u32) -> Self {
        CurveClass { deficiency, type_flag, component_count, disorienting: Vec::new() }
    }

    /// Derives the class of `scheme` on `model`. Explicit selectors must
    /// agree with the component count when the Harnack bound is known.
    pub fn for_scheme(scheme: &RealScheme, model: &SurfaceModel, selector: ClassSelector) -> Result<Self, ModelError> {
        let count = scheme.curve_component_count() as u32;
        let derived = model.m_count.map(|m| m as i64 - count as i64);
        if let Some(j) = derived {
            if j < 0 {
                return Err(ModelError::CurveClass(format!(
                    "{count} components exceed the Harnack bound {}",
                    model.m_count.unwrap_or(0)
                )));
            }
        }
        let check = |want: u32| -> Result<Option<u32>, ModelError> {
            match derived {
                Some(j) if j != i64::from(want) => Err(ModelError::CurveClass(format!(
                    "scheme has {count} components, an (M-{want})-curve needs {}",
                    model.m_count.unwrap_or(0) as i64 - i64::from(want)
                ))),
                _ => Ok(Some(want)),
            }
        };
        let (deficiency, type_flag) = match selector {
            ClassSelector::M => (check(0)?, TypeFlag::I),
            ClassSelector::MMinus1 => (check(1)?, TypeFlag::II),
            ClassSelector::MMinus2 => (check(2)?, TypeFlag::Unknown),
            ClassSelector::TypeI => (derived.map(|j| j as u32), TypeFlag::I),
            ClassSelector::Auto => {
                let j = derived.map(|j| j as u32);
                (j, default_type_flag(j))
            }
        };
        Ok(CurveClass { deficiency, type_flag, component_count: count, disorienting: Vec::new() })
    }
}

/// M-curves are of type I and (M−1)-curves of type II; otherwise unknown.
pub fn default_type_flag(deficiency: Option<u32>) -> TypeFlag {
    match deficiency {
        Some(0) => TypeFlag::I,
        Some(1) => TypeFlag::II,
        _ => TypeFlag::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::parse_scheme;

    #[test]
    fn catalog_constants() {
        let e = SurfaceModel::ellipsoid(3).unwrap();
        assert_eq!((e.e_a, e.chi_rb, e.sigma_cb, e.m_count), (18, 2, 0, Some(5)));
        assert_eq!(e.theorem1_constant(), Some(5));
        assert_eq!(SurfaceModel::ellipsoid(5).unwrap().theorem1_constant(), Some(13));
        assert!(!SurfaceModel::ellipsoid(4).unwrap().characteristic_type.holds);
        let h = SurfaceModel::hyperboloid(2, 4).unwrap();
        assert_eq!((h.e_a, h.m_count), (16, Some(4)));
        let c = SurfaceModel::cubic_disjoint();
        assert_eq!(c.e_a, ci_normal_euler(&[3, 2]));
        assert_eq!(c.theorem1_constant(), Some(5));
        assert_eq!(ci_genus(&[3, 2]), Some(4));
        assert_eq!(ci_genus(&[4]), Some(3));
        assert_eq!(ci_genus(&[2, 3]), Some(4));
        let p = SurfaceModel::plane(4).unwrap();
        assert_eq!(p.theorem1_constant(), Some(4));
        assert_eq!(p.m_count, Some(4));
    }

    #[test]
    fn ci_validates_components() {
        let comps = vec![SurfaceComponent::new("s2", Carrier::Sphere)];
        assert!(SurfaceModel::complete_intersection(vec![2, 4], 2, 0, comps.clone(), None, None).is_ok());
        assert!(SurfaceModel::complete_intersection(vec![2, 4], 3, 0, comps, None, None).is_err());
    }

    #[test]
    fn curve_class_selection() {
        let e = SurfaceModel::ellipsoid(3).unwrap();
        let s = parse_scheme("4u1").unwrap();
        let m = CurveClass::for_scheme(&s, &e, ClassSelector::M).unwrap();
        assert_eq!((m.deficiency, m.type_flag), (Some(0), TypeFlag::I));
        assert!(CurveClass::for_scheme(&s, &e, ClassSelector::MMinus1).is_err());
        let nest = parse_scheme("1<1<1>>").unwrap();
        let auto = CurveClass::for_scheme(&nest, &e, ClassSelector::Auto).unwrap();
        assert_eq!((auto.deficiency, auto.type_flag), (Some(2), TypeFlag::Unknown));
        let big = parse_scheme("6").unwrap();
        assert!(CurveClass::for_scheme(&big, &e, ClassSelector::Auto).is_err());
    }
}
