//! Group arguments of the form `sym:N`, `alt:N` or `gens:FILE`.

use std::fmt;
use std::fs;
use std::str::FromStr;

use distinguish::distinguishing::{
    count_distinguishing_colorings_within, distinguishing_number_within,
};
use distinguish::formulas::factorial;
use distinguish::{nr_alternating, nr_symmetric, Error, GroupAction, Permutation};
use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Sym(usize),
    Alt(usize),
    Gens(String),
}

impl FromStr for GroupSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected sym:N, alt:N or gens:FILE, got {:?}", s))?;
        let degree = || {
            arg.parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| format!("bad degree {:?}", arg))
        };
        match kind {
            "sym" => Ok(GroupSource::Sym(degree()?)),
            "alt" => Ok(GroupSource::Alt(degree()?)),
            "gens" if !arg.is_empty() => Ok(GroupSource::Gens(arg.to_string())),
            _ => Err(format!("expected sym:N, alt:N or gens:FILE, got {:?}", s)),
        }
    }
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSource::Sym(n) => write!(f, "sym:{}", n),
            GroupSource::Alt(n) => write!(f, "alt:{}", n),
            GroupSource::Gens(path) => write!(f, "gens:{}", path),
        }
    }
}

/// Reads a generator file: `degree N` on the first line, then one
/// permutation in cycle notation per line. Blank lines and `#` comments are
/// skipped.
pub fn read_generators(path: &str) -> distinguish::Result<(usize, Vec<Permutation>)> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {}", path, e)))?;
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse(format!("{}: empty generator file", path)))?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Parse(format!("{}: first line must be `degree N`", path)))?;
    let generators = lines
        .map(|l| Permutation::parse_cycles(l, degree))
        .collect::<distinguish::Result<Vec<_>>>()?;
    Ok((degree, generators))
}

/// `r -> n_r` for a fixed group.
pub type Counter<'a> = Box<dyn FnMut(u64) -> distinguish::Result<BigUint> + 'a>;

/// Natural actions and generated groups with the resource caps applied.
pub struct Limits {
    pub max_elements: usize,
    pub budget: u64,
}

impl Limits {
    fn check_order(&self, order: BigUint) -> distinguish::Result<()> {
        if order > BigUint::from(self.max_elements) {
            return Err(Error::ElementCapExceeded {
                cap: self.max_elements,
            });
        }
        Ok(())
    }

    pub fn action(&self, source: &GroupSource) -> distinguish::Result<GroupAction> {
        match source {
            GroupSource::Sym(n) => {
                self.check_order(factorial(*n as u64))?;
                Ok(GroupAction::symmetric(*n))
            }
            GroupSource::Alt(n) => {
                self.check_order(factorial(*n as u64))?;
                Ok(GroupAction::alternating(*n))
            }
            GroupSource::Gens(path) => {
                let (degree, generators) = read_generators(path)?;
                GroupAction::generated_capped(degree, generators, self.max_elements)
            }
        }
    }

    /// `D_H(Y)`: known for natural actions, brute force otherwise.
    pub fn distinguishing_number(&self, source: &GroupSource) -> distinguish::Result<u64> {
        match source {
            GroupSource::Sym(n) => Ok(*n as u64),
            GroupSource::Alt(n) if *n >= 3 => Ok(*n as u64 - 1),
            GroupSource::Alt(_) => Ok(1),
            GroupSource::Gens(_) => {
                let action = self.action(source)?;
                Ok(distinguishing_number_within(&action, self.budget)? as u64)
            }
        }
    }

    /// `n_r` as a function of `r`, together with `|G|`.
    pub fn counter(&self, source: &GroupSource) -> distinguish::Result<(BigUint, Counter<'_>)> {
        match *source {
            GroupSource::Sym(n) => {
                let n = n as u64;
                Ok((factorial(n), Box::new(move |r| Ok(nr_symmetric(n, r)))))
            }
            GroupSource::Alt(n) if n >= 3 => {
                let n = n as u64;
                Ok((factorial(n) / 2u32, Box::new(move |r| nr_alternating(n, r))))
            }
            // A_1 and A_2 are trivial, so every coloring distinguishes
            GroupSource::Alt(n) => Ok((
                BigUint::from(1u32),
                Box::new(move |r| Ok(BigUint::from(r).pow(n as u32))),
            )),
            GroupSource::Gens(_) => {
                let action = self.action(source)?;
                let order = BigUint::from(action.order());
                let budget = self.budget;
                Ok((
                    order,
                    // the wreath search stops at r = 10^6, well inside u32
                    Box::new(move |r| {
                        count_distinguishing_colorings_within(&action, r as u32, budget)
                    }),
                ))
            }
        }
    }
}
