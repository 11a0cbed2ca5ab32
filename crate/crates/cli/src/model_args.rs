use clap::{Args, ValueEnum};

use real_schemes::model::{Carrier, SurfaceComponent, SurfaceModel, SurfaceType};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    Ellipsoid,
    Hyperboloid,
    Plane,
    CubicDisjoint,
    Ci,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    Abs,
    Rel,
}

/// Surface model selection shared by the subcommands.
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelName>,
    /// Degree: `d` of bidegree (d, d) on the ellipsoid, or the plane curve degree.
    #[arg(long)]
    pub d: Option<u32>,
    /// Bidegree `d,r` on the hyperboloid (or `d,d` on the ellipsoid).
    #[arg(long, value_delimiter = ',', num_args = 2)]
    pub bidegree: Option<Vec<u32>>,
    /// Complete-intersection degrees `m1,...,ms`, the curve cut by the last.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    /// Euler characteristic of the real surface (complete intersections).
    #[arg(long, allow_hyphen_values = true)]
    pub chi_rb: Option<i64>,
    /// Signature of the complex surface (complete intersections).
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<i64>,
    /// Surface components: `sphere`, `rp2` or `torus`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub components: Option<Vec<String>>,
    #[arg(long, value_enum)]
    pub surface_type: Option<TypeArg>,
    /// The real surface is an M-surface.
    #[arg(long)]
    pub m_surface: bool,
}

impl ModelArgs {
    pub fn build(&self) -> Result<SurfaceModel, CliError> {
        let name = self.model.ok_or_else(|| CliError::input("usage", "--model is required"))?;
        let ci_only = [
            ("--degrees", self.degrees.is_some()),
            ("--chi-rb", self.chi_rb.is_some()),
            ("--sigma", self.sigma.is_some()),
            ("--components", self.components.is_some()),
            ("--surface-type", self.surface_type.is_some()),
            ("--m-surface", self.m_surface),
        ];
        if name != ModelName::Ci {
            if let Some((flag, _)) = ci_only.iter().find(|(_, set)| *set) {
                return Err(conflict(flag, name));
            }
        }
        match name {
            ModelName::Ellipsoid => {
                let d = match (self.d, self.bidegree.as_deref()) {
                    (Some(d), None) => d,
                    (None, Some(&[d, r])) if d == r => d,
                    (None, Some(_)) => {
                        return Err(CliError::input("model", "curves on the ellipsoid have bidegree (d, d)"));
                    }
                    (Some(_), Some(_)) => return Err(CliError::input("usage", "give either --d or --bidegree")),
                    (None, None) => return Err(CliError::input("usage", "the ellipsoid needs --d")),
                };
                Ok(SurfaceModel::ellipsoid(d)?)
            }
            ModelName::Hyperboloid => {
                if self.d.is_some() {
                    return Err(conflict("--d", name));
                }
                match self.bidegree.as_deref() {
                    Some(&[d, r]) => Ok(SurfaceModel::hyperboloid(d, r)?),
                    _ => Err(CliError::input("usage", "the hyperboloid needs --bidegree d,r")),
                }
            }
            ModelName::Plane => {
                if self.bidegree.is_some() {
                    return Err(conflict("--bidegree", name));
                }
                let m = self.d.ok_or_else(|| CliError::input("usage", "the plane needs --d"))?;
                Ok(SurfaceModel::plane(m)?)
            }
            ModelName::CubicDisjoint => {
                if let Some(flag) = [("--d", self.d.is_some()), ("--bidegree", self.bidegree.is_some())]
                    .iter()
                    .find(|(_, set)| *set)
                    .map(|(f, _)| f)
                {
                    return Err(conflict(flag, name));
                }
                Ok(SurfaceModel::cubic_disjoint())
            }
            ModelName::Ci => self.complete_intersection(),
        }
    }

    fn complete_intersection(&self) -> Result<SurfaceModel, CliError> {
        if self.d.is_some() || self.bidegree.is_some() {
            return Err(CliError::input("usage", "complete intersections take --degrees, not --d or --bidegree"));
        }
        let need = |flag: &str| CliError::input("usage", format!("--model ci needs {flag}"));
        let degrees = self.degrees.clone().ok_or_else(|| need("--degrees"))?;
        let chi_rb = self.chi_rb.ok_or_else(|| need("--chi-rb"))?;
        let sigma = self.sigma.ok_or_else(|| need("--sigma"))?;
        let names = self.components.clone().ok_or_else(|| need("--components"))?;
        let mut components = Vec::new();
        for (i, n) in names.iter().enumerate() {
            let carrier = match n.as_str() {
                "sphere" | "s2" => Carrier::Sphere,
                "rp2" => Carrier::ProjectivePlane,
                "torus" | "t2" => Carrier::Torus,
                other => return Err(CliError::input("model", format!("unknown surface component '{other}'"))),
            };
            let used = names[..i].iter().filter(|m| *m == n).count();
            let tag =
                if used == 0 { carrier.default_tag().to_string() } else { format!("{}_{used}", carrier.default_tag()) };
            components.push(SurfaceComponent::new(&tag, carrier));
        }
        let surface_type = self.surface_type.map(|t| match t {
            TypeArg::Abs => SurfaceType::Abs,
            TypeArg::Rel => SurfaceType::Rel,
        });
        let m_surface = Some(self.m_surface);
        Ok(SurfaceModel::complete_intersection(degrees, chi_rb, sigma, components, surface_type, m_surface)?)
    }
}

fn conflict(flag: &str, model: ModelName) -> CliError {
    let name = model.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    CliError::input("usage", format!("{flag} does not apply to --model {name}"))
}
