//! Named regular graph families with frozen vertex and edge numbering.
//!
//! | family               | vertices                      | edge order                                   |
//! |----------------------|-------------------------------|----------------------------------------------|
//! | `cycle:n`            | `0..n`                        | edge `i` = `(i, i+1 mod n)`                  |
//! | `complete:n`         | `0..n`                        | lexicographic pairs                          |
//! | `complete_bipartite:a,b` | left `0..a`, right `a..a+b` | `(i, a+j)` lexicographic                   |
//! | `petersen`           | outer `0..5`, inner `5..10`   | outer cycle, inner pentagram `(5+i, 5+(i+2)%5)`, spokes `(i, i+5)` |
//! | `prism:n`            | outer `0..n`, inner `n..2n`   | outer cycle, inner cycle, rungs `(i, i+n)`   |
//! | `moebius_ladder:n`   | `0..2n`                       | rim cycle `(i, i+1 mod 2n)`, then rungs `(i, i+n)` |
//! | `hypercube:d`        | bit strings `0..2^d`          | `(x, x ^ 2^b)` with `x` below, lexicographic |

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} expects {expected} parameter(s), got {got}")]
    Arity {
        family: Family,
        expected: usize,
        got: usize,
    },
    #[error("{family}: parameter {value} out of range ({range})")]
    OutOfRange {
        family: Family,
        value: usize,
        range: &'static str,
    },
    #[error("cannot parse `{0}` as a family parameter")]
    BadParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    Petersen,
    Prism,
    MoebiusLadder,
    Hypercube,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Petersen,
        Family::Prism,
        Family::MoebiusLadder,
        Family::Hypercube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Petersen => "petersen",
            Family::Prism => "prism",
            Family::MoebiusLadder => "moebius_ladder",
            Family::Hypercube => "hypercube",
        }
    }

    /// Human-readable parameter signature, e.g. `n>=3`.
    pub fn parameters(self) -> &'static str {
        match self {
            Family::Cycle | Family::Complete => "n>=3",
            Family::CompleteBipartite => "a>=2,b>=2",
            Family::Petersen => "",
            Family::Prism | Family::MoebiusLadder => "n>=3",
            Family::Hypercube => "d>=2",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family member, e.g. `cycle:7` or `complete_bipartite:3,3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self, FamilyError> {
        let spec = FamilySpec { family, params };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<(), FamilyError> {
        let family = self.family;
        if self.params.len() != family.arity() {
            return Err(FamilyError::Arity {
                family,
                expected: family.arity(),
                got: self.params.len(),
            });
        }
        let limit = |value: usize, lo: usize, hi: usize, range| {
            if (lo..=hi).contains(&value) {
                Ok(())
            } else {
                Err(FamilyError::OutOfRange {
                    family,
                    value,
                    range,
                })
            }
        };
        match family {
            Family::Cycle | Family::Complete => limit(self.params[0], 3, MAX_VERTICES, "3..=500"),
            Family::CompleteBipartite => {
                limit(self.params[0], 2, MAX_VERTICES, "2..=498")?;
                limit(self.params[1], 2, MAX_VERTICES - self.params[0], "a+b<=500, b>=2")
            }
            Family::Petersen => Ok(()),
            Family::Prism | Family::MoebiusLadder => {
                limit(self.params[0], 3, MAX_VERTICES / 2, "3..=250")
            }
            Family::Hypercube => limit(self.params[0], 2, 8, "2..=8"),
        }
    }

    /// Parses a spec whose parameters may be inclusive ranges `a..b`,
    /// returning the cartesian product in lexicographic order.
    pub fn parse_range(s: &str) -> Result<Vec<FamilySpec>, FamilyError> {
        let (name, params) = split_spec(s);
        let family: Family = name.parse()?;
        let mut ranges = Vec::new();
        for p in params {
            let (lo, hi) = match p.split_once("..") {
                Some((a, b)) => (parse_param(a)?, parse_param(b.trim_start_matches('='))?),
                None => {
                    let v = parse_param(p)?;
                    (v, v)
                }
            };
            if lo > hi {
                return Err(FamilyError::BadParameter(p.to_string()));
            }
            ranges.push(lo..=hi);
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for r in ranges {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    r.clone().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|params| FamilySpec::new(family, params)).collect()
    }

    pub fn generate(&self) -> Graph {
        generate(self)
    }
}

fn split_spec(s: &str) -> (&str, Vec<&str>) {
    match s.trim().split_once(':') {
        Some((name, rest)) if !rest.is_empty() => (name, rest.split(',').map(str::trim).collect()),
        Some((name, _)) => (name, Vec::new()),
        None => (s.trim(), Vec::new()),
    }
}

fn parse_param(p: &str) -> Result<usize, FamilyError> {
    p.trim()
        .parse()
        .map_err(|_| FamilyError::BadParameter(p.to_string()))
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = split_spec(s);
        let family: Family = name.parse()?;
        let params = params.into_iter().map(parse_param).collect::<Result<_, _>>()?;
        FamilySpec::new(family, params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

fn cycle_edges(offset: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n))
}

pub fn generate(spec: &FamilySpec) -> Graph {
    let p = &spec.params;
    let (n, edges): (usize, Vec<_>) = match spec.family {
        Family::Cycle => (p[0], cycle_edges(0, p[0]).collect()),
        Family::Complete => {
            let n = p[0];
            (n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
        }
        Family::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            (a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect())
        }
        Family::Petersen => {
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            (10, cycle_edges(0, 5).chain(inner).chain(spokes).collect())
        }
        Family::Prism => {
            let n = p[0];
            let rungs = (0..n).map(move |i| (i, i + n));
            (2 * n, cycle_edges(0, n).chain(cycle_edges(n, n)).chain(rungs).collect())
        }
        Family::MoebiusLadder => {
            let n = p[0];
            let rungs = (0..n).map(move |i| (i, i + n));
            (2 * n, cycle_edges(0, 2 * n).chain(rungs).collect())
        }
        Family::Hypercube => {
            let d = p[0];
            let n = 1usize << d;
            // y = x + 2^b grows with b, so this is already lexicographic.
            let edges = (0..n)
                .flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b))))
                .filter(|&(x, y)| x < y)
                .collect();
            (n, edges)
        }
    };
    Graph::new(n, edges).expect("family constructions are simple and connected")
}

/// Known aggregate values; `None` means not tabulated here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpectedMu {
    pub mu11: Option<usize>,
    pub mu12: Option<usize>,
    pub mu21: Option<usize>,
    pub mu22: Option<usize>,
}

impl ExpectedMu {
    pub const UNKNOWN: ExpectedMu = ExpectedMu {
        mu11: None,
        mu12: None,
        mu21: None,
        mu22: None,
    };

    /// Both chains `mu11 <= mu12 <= mu22` and `mu11 <= mu21 <= mu22`,
    /// vacuously true when any entry is unknown.
    pub fn chains_hold(&self) -> bool {
        match (self.mu11, self.mu12, self.mu21, self.mu22) {
            (Some(a), Some(b), Some(c), Some(d)) => a <= b && b <= d && a <= c && c <= d,
            _ => true,
        }
    }
}

/// Closed-form aggregates of the cycle `C_n`.
pub fn expected_mu_cycle(n: usize) -> Result<ExpectedMu, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OutOfRange {
            family: Family::Cycle,
            value: n,
            range: "n>=3",
        });
    }
    let k = n / 2;
    let (mu11, mu12, mu21, mu22) = if n % 2 == 0 {
        (if k == 2 { 1 } else { 0 }, n, n - 1, n)
    } else {
        (if k == 1 { 2 } else { 0 }, 2, 2 * k, 2 * k)
    };
    Ok(ExpectedMu {
        mu11: Some(mu11),
        mu12: Some(mu12),
        mu21: Some(mu21),
        mu22: Some(mu22),
    })
}

/// Expected aggregates for a family member; only cycles are tabulated.
pub fn expected_mu(spec: &FamilySpec) -> ExpectedMu {
    match spec.family {
        Family::Cycle => expected_mu_cycle(spec.params[0]).unwrap_or(ExpectedMu::UNKNOWN),
        _ => ExpectedMu::UNKNOWN,
    }
}
