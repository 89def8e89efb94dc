//! Parsing of group spec strings from the command line.
//!
//! Accepted forms:
//!
//! * `parabolic:<q>:<r>:<parts>` with comma-separated parts summing to r,
//!   e.g. `parabolic:2:4:1,2,1`
//! * `cyclic:<n>`
//! * `dihedral:<order>` with an even order of at least 4
//! * `quaternion:8`
//! * `elemabelian:<power of two>`
//! * `klein4`, shorthand for `elemabelian:4`

use webbcert::grpcore::{GeneratorSet, GroupLabel};
use webbcert::parabolic::{parabolic_generators, Composition, ParabolicSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Parabolic { q: u64, parts: Vec<u32> },
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    ElemAbelian(usize),
}

pub fn parse_parts(s: &str) -> Result<Vec<u32>, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if parts.is_empty() || parts.contains(&0) {
        return Err("parts must be positive integers".to_string());
    }
    Ok(parts)
}

pub fn parse(s: &str) -> Result<GroupSpec, String> {
    if s == "klein4" {
        return Ok(GroupSpec::ElemAbelian(4));
    }
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| format!("unknown group spec {s:?}"))?;
    match kind {
        "parabolic" => {
            let (q_str, rest) = rest
                .split_once(':')
                .ok_or_else(|| "parabolic needs q:r:parts".to_string())?;
            let (r_str, parts_str) = rest
                .split_once(':')
                .ok_or_else(|| "parabolic needs q:r:parts".to_string())?;
            let q: u64 = q_str.parse().map_err(|e| format!("bad q {q_str:?}: {e}"))?;
            if q < 2 {
                return Err(format!("q must be at least 2, got {q}"));
            }
            let r: u32 = r_str.parse().map_err(|e| format!("bad rank {r_str:?}: {e}"))?;
            let parts = parse_parts(parts_str)?;
            let total: u32 = parts.iter().sum();
            if total != r {
                return Err(format!("parts sum to {total}, not to the stated rank {r}"));
            }
            Ok(GroupSpec::Parabolic { q, parts })
        }
        "cyclic" => {
            let n: usize = rest.parse().map_err(|e| format!("bad order {rest:?}: {e}"))?;
            if n < 1 {
                return Err("cyclic order must be at least 1".to_string());
            }
            Ok(GroupSpec::Cyclic(n))
        }
        "dihedral" => {
            let n: usize = rest.parse().map_err(|e| format!("bad order {rest:?}: {e}"))?;
            if n < 4 || n % 2 != 0 {
                return Err(format!("dihedral order must be even and at least 4, got {n}"));
            }
            Ok(GroupSpec::Dihedral(n))
        }
        "quaternion" => {
            if rest != "8" {
                return Err(format!("only quaternion:8 is supported, got order {rest:?}"));
            }
            Ok(GroupSpec::Quaternion8)
        }
        "elemabelian" => {
            let n: usize = rest.parse().map_err(|e| format!("bad order {rest:?}: {e}"))?;
            if n < 1 || !n.is_power_of_two() {
                return Err(format!("elementary abelian order must be a power of two, got {n}"));
            }
            Ok(GroupSpec::ElemAbelian(n))
        }
        other => Err(format!("unknown group kind {other:?}")),
    }
}

impl GroupSpec {
    /// Canonical label; aliases collapse, so `klein4` labels as
    /// `elemabelian:4`.
    pub fn label(&self) -> GroupLabel {
        match self {
            GroupSpec::Parabolic { q, parts } => {
                ParabolicSpec::new(Composition::new(parts.clone()), *q).label()
            }
            GroupSpec::Cyclic(n) => GroupLabel::new(&format!("cyclic:{n}")),
            GroupSpec::Dihedral(n) => GroupLabel::new(&format!("dihedral:{n}")),
            GroupSpec::Quaternion8 => GroupLabel::new("quaternion:8"),
            GroupSpec::ElemAbelian(n) => GroupLabel::new(&format!("elemabelian:{n}")),
        }
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, String> {
        match self {
            GroupSpec::Parabolic { q, parts } => {
                if *q != 2 {
                    return Err(format!(
                        "only q=2 parabolic subgroups can be enumerated, got q={q}"
                    ));
                }
                let r: u32 = parts.iter().sum();
                if r > 8 {
                    return Err(format!("matrix generators are limited to rank <= 8, got rank {r}"));
                }
                Ok(parabolic_generators(&Composition::new(parts.clone())))
            }
            GroupSpec::Cyclic(n) => Ok(GeneratorSet::cyclic(*n)),
            GroupSpec::Dihedral(n) => Ok(GeneratorSet::dihedral(*n)),
            GroupSpec::Quaternion8 => Ok(GeneratorSet::quaternion8()),
            GroupSpec::ElemAbelian(n) => Ok(GeneratorSet::elem_abelian(*n)),
        }
    }
}
