//! Parsing of field, scalar, space, group and root-system arguments.

use matsuo_core::constructions::presented_group;
use matsuo_core::fischer::{build_p2_dual, build_p3, gamma_of_rootsystem, roots_of, PartialTripleSystem, RootType};
use matsuo_core::groups::{build_3sq2, build_sym, build_wk_aff_a, coset_budget_from_env, Presentation, Strategy};
use matsuo_core::{FieldSpec, Scalar};

use crate::CliError;

pub fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("--field {s}: {e}")))
}

pub fn parse_alpha(s: &str, field: FieldSpec) -> Result<Scalar, CliError> {
    field
        .parse_scalar(s)
        .map_err(|e| CliError::Usage(format!("--alpha {s}: {e}")))
}

/// A named point-line geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceSource {
    /// `P3` or `P2dual`.
    Named(String),
    /// `sym:N`, `3sq2`, `W<k>A<n>`, `G4`, `G5`.
    Group(String),
    /// A root system such as `A4`, `D5` or `E6`.
    Roots(RootType),
}

impl SpaceSource {
    pub fn from_flags(space: Option<&str>, group: Option<&str>, roots: Option<&str>) -> Result<Self, CliError> {
        match (space, group, roots) {
            (Some(s), None, None) => Ok(SpaceSource::Named(s.to_string())),
            (None, Some(g), None) => Ok(SpaceSource::Group(g.to_string())),
            (None, None, Some(r)) => r
                .parse()
                .map(SpaceSource::Roots)
                .map_err(|e| CliError::Usage(format!("--roots {r}: {e}"))),
            _ => Err(CliError::Usage("give exactly one of --space, --group, --roots".into())),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SpaceSource::Named(s) => format!("space:{s}"),
            SpaceSource::Group(g) => format!("group:{g}"),
            SpaceSource::Roots(r) => format!("roots:{r}"),
        }
    }

    pub fn build(&self) -> Result<PartialTripleSystem, CliError> {
        match self {
            SpaceSource::Named(s) => match s.to_ascii_lowercase().as_str() {
                "p3" => Ok(build_p3()),
                "p2dual" | "p2v" => Ok(build_p2_dual()),
                _ => Err(CliError::Usage(format!("unknown space {s:?}; expected P3 or P2dual"))),
            },
            SpaceSource::Roots(r) => {
                gamma_of_rootsystem(&roots_of(*r)).map_err(|e| CliError::Usage(format!("roots {r}: {e}")))
            }
            SpaceSource::Group(g) => group_space(g),
        }
    }
}

fn failed<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Failed(e.to_string())
}

fn group_space(spec: &str) -> Result<PartialTripleSystem, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "unknown group {spec:?}; expected sym:N, 3sq2, W<k>A<n>, G4 or G5"
        ))
    };
    if let Some(n) = spec.strip_prefix("sym:") {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(bad());
        }
        return build_sym(n).gamma().map_err(failed);
    }
    match spec {
        "3sq2" => return build_3sq2().gamma().map_err(failed),
        "G4" | "G5" => {
            let p = if spec == "G4" {
                Presentation::g4()
            } else {
                Presentation::g5()
            };
            let g = presented_group(&p, coset_budget_from_env(), Strategy::Felsch).map_err(failed)?;
            return g.gamma().map_err(failed);
        }
        _ => {}
    }
    let (k, n) = spec
        .strip_prefix('W')
        .and_then(|rest| rest.split_once('A'))
        .ok_or_else(bad)?;
    let k: u8 = k.parse().map_err(|_| bad())?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if !matches!(k, 2 | 3) || n < 2 {
        return Err(bad());
    }
    build_wk_aff_a(k, n).realization.gamma().map_err(failed)
}
