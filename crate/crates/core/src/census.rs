//! Shapes and characters of join-irreducible elements of type D, the
//! per-shape counting formula, and the census of all bricks grouped by shape.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bricks::{brick_diagram, BrickDiagram, BrickParamsD};
use crate::coxeter::{enumerate_group, CoxeterElement, DynkinType, Family};
use crate::error::{Error, Result};

/// `(a, b, r')`. The derived order is the grouping order of the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShapeSigma {
    pub a: i32,
    pub b: i32,
    pub r_prime: i32,
}

impl fmt::Display for ShapeSigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.r_prime)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShapeCase {
    A,
    B,
    C,
}

impl ShapeSigma {
    pub fn new(a: i32, b: i32, r_prime: i32) -> Self {
        ShapeSigma { a, b, r_prime }
    }

    /// Which of the three feasibility conditions holds at rank `n`, if any.
    pub fn case(&self, n: usize) -> Option<ShapeCase> {
        let (a, b, rp, n) = (self.a, self.b, self.r_prime, n as i32);
        if !(2..=n).contains(&a) {
            return None;
        }
        if (-1..a).contains(&b) && b != 0 && rp == 0 {
            Some(ShapeCase::A)
        } else if -a < b && b <= -2 && (0..=b.abs() - 1).contains(&rp) {
            Some(ShapeCase::B)
        } else if -n <= b && b < -a && (0..=a - 2).contains(&rp) {
            Some(ShapeCase::C)
        } else {
            None
        }
    }

    /// The allowed values of each term of the character, indexed from 1.
    pub fn chi_factors(&self, n: usize) -> Result<Vec<Vec<u8>>> {
        let case = self.case(n).ok_or_else(|| self.infeasible(n))?;
        let (a, b, rp) = (self.a, self.b.abs(), self.r_prime);
        Ok((1..=n as i32)
            .map(|i| {
                let x: &[u8] = match case {
                    ShapeCase::A => match i {
                        _ if i < b => &[0],
                        _ if i == b && self.b == -1 => &[1],
                        _ if i == b => &[2],
                        _ if i < a => &[0, 2],
                        _ if i == a => &[0],
                        _ => &[2],
                    },
                    ShapeCase::B => match i {
                        _ if i <= rp => &[1, 2],
                        _ if i == rp + 1 && i != b => &[0],
                        _ if i < b => &[0, 1, 2],
                        _ if i == b => &[1],
                        _ if i < a => &[0, 2],
                        _ if i == a => &[0],
                        _ => &[2],
                    },
                    ShapeCase::C => match i {
                        _ if i <= rp => &[1, 2],
                        _ if i == rp + 1 => &[0],
                        _ if i < a => &[0, 1, 2],
                        _ if i == a => &[0],
                        _ if i < b => &[1, 2],
                        _ if i == b => &[1],
                        _ => &[2],
                    },
                };
                x.to_vec()
            })
            .collect())
    }

    fn infeasible(&self, n: usize) -> Error {
        Error::Domain(format!("shape {self} is not feasible in rank {n}"))
    }
}

/// `0`, `1` or `2` per `i` as `R` meets `{i, -i}` in nothing, `-i` or `i`.
pub type ChiVector = Vec<u8>;

fn d_params(w: &CoxeterElement) -> Result<BrickParamsD> {
    if w.dynkin().family != Family::D {
        return Err(Error::Domain(format!("shapes are defined in type D only, got {}", w.dynkin())));
    }
    BrickParamsD::new(w)
}

pub fn sigma(w: &CoxeterElement) -> Result<ShapeSigma> {
    let p = d_params(w)?;
    let r_prime = if p.b >= -1 { 0 } else { p.r.min(p.b.abs() - 1) };
    Ok(ShapeSigma::new(p.a, p.b, r_prime))
}

pub fn chi(w: &CoxeterElement) -> Result<ChiVector> {
    let p = d_params(w)?;
    Ok((1..=w.dynkin().rank as i32)
        .map(|i| {
            if p.r_set.contains(&i) {
                2
            } else if p.r_set.contains(&-i) {
                1
            } else {
                0
            }
        })
        .collect())
}

pub fn shape_count(s: ShapeSigma, n: usize) -> Result<u64> {
    s.case(n).ok_or_else(|| s.infeasible(n))?;
    let x = s.a.max(s.b.abs());
    let y = s.a.min(s.b.abs());
    let tail = 2u64.pow((x - y - 1) as u32);
    Ok(if s.b >= -1 {
        tail
    } else {
        2u64.pow(s.r_prime as u32) * 3u64.pow((y - s.r_prime - 2).max(0) as u32) * tail
    })
}

/// Every feasible shape at rank `n`, in census order.
pub fn feasible_shapes(n: usize) -> Vec<ShapeSigma> {
    let n = n as i32;
    (2..=n)
        .flat_map(|a| (-n..a).flat_map(move |b| (0..n).map(move |rp| ShapeSigma::new(a, b, rp))))
        .filter(|s| s.case(n as usize).is_some())
        .collect()
}

/// `|jirr W|` from the closed formula.
pub fn global_count(t: DynkinType) -> u128 {
    let n = t.rank as u32;
    match t.family {
        Family::A => 2u128.pow(n + 1) - u128::from(n) - 2,
        Family::D => 3u128.pow(n) - u128::from(n) * 2u128.pow(n - 1) - u128::from(n) - 1,
    }
}

pub fn join_irreducibles(t: DynkinType, cap: usize) -> Result<Vec<CoxeterElement>> {
    Ok(enumerate_group(t, cap)?
        .into_par_iter()
        .filter(|w| w.join_irreducible_type().is_some())
        .collect())
}

pub type Census = BTreeMap<ShapeSigma, Vec<(CoxeterElement, BrickDiagram)>>;

/// All bricks of type `D_n`, grouped by shape and ordered by character.
pub fn census(t: DynkinType, cap: usize) -> Result<Census> {
    if t.family != Family::D {
        return Err(Error::Unsupported(format!("census is defined for type D, got {t}")));
    }
    let rows: Vec<(ShapeSigma, ChiVector, CoxeterElement, BrickDiagram)> = join_irreducibles(t, cap)?
        .into_par_iter()
        .map(|w| {
            let d = brick_diagram(&w)?;
            Ok((sigma(&w)?, chi(&w)?, w, d))
        })
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<ShapeSigma, Vec<(ChiVector, CoxeterElement, BrickDiagram)>> = BTreeMap::new();
    for (s, c, w, d) in rows {
        out.entry(s).or_default().push((c, w, d));
    }
    Ok(out
        .into_iter()
        .map(|(s, mut v)| {
            v.sort_by(|x, y| x.0.cmp(&y.0));
            (s, v.into_iter().map(|(_, w, d)| (w, d)).collect())
        })
        .collect())
}

/// One census record in the line format
/// `sigma=a,b,r' window=... symbols=... arrows=s>t;...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub sigma: ShapeSigma,
    pub window: Vec<i32>,
    /// Ascending.
    pub symbols: Vec<i32>,
    /// Sorted.
    pub arrows: Vec<(i32, i32)>,
}

impl FixtureEntry {
    pub fn from_diagram(sigma: ShapeSigma, w: &CoxeterElement, d: &BrickDiagram) -> Self {
        let mut symbols = d.symbols();
        symbols.sort();
        let mut arrows = d.arrows.clone();
        arrows.sort();
        FixtureEntry {
            sigma,
            window: w.window().to_vec(),
            symbols,
            arrows,
        }
    }
}

impl fmt::Display for FixtureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma={},{},{} window={} symbols={} arrows={}",
            self.sigma.a,
            self.sigma.b,
            self.sigma.r_prime,
            self.window.iter().join(","),
            self.symbols.iter().join(","),
            self.arrows.iter().map(|(s, t)| format!("{s}>{t}")).join(";")
        )
    }
}

fn parse_ints(field: &str, s: &str) -> Result<Vec<i32>> {
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|x| {
            x.trim().parse().map_err(|_| Error::Parse {
                token: x.to_string(),
                reason: format!("bad integer in {field}"),
            })
        })
        .collect()
}

impl std::str::FromStr for FixtureEntry {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for part in line.split_whitespace() {
            let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse {
                token: part.to_string(),
                reason: "expected key=value".into(),
            })?;
            fields.insert(k, v);
        }
        let get = |k: &str| {
            fields.get(k).copied().ok_or_else(|| Error::Parse {
                token: line.to_string(),
                reason: format!("missing field {k}"),
            })
        };
        let s = parse_ints("sigma", get("sigma")?)?;
        if s.len() != 3 {
            return Err(Error::Parse {
                token: get("sigma")?.to_string(),
                reason: "sigma needs three integers".into(),
            });
        }
        let arrows = get("arrows")?
            .split(';')
            .filter(|x| !x.is_empty())
            .map(|x| {
                let bad = || Error::Parse {
                    token: x.to_string(),
                    reason: "expected s>t".into(),
                };
                let (a, b) = x.split_once('>').ok_or_else(bad)?;
                Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
            })
            .collect::<Result<_>>()?;
        Ok(FixtureEntry {
            sigma: ShapeSigma::new(s[0], s[1], s[2]),
            window: parse_ints("window", get("window")?)?,
            symbols: parse_ints("symbols", get("symbols")?)?,
            arrows,
        })
    }
}

pub fn parse_fixture(text: &str) -> Result<Vec<FixtureEntry>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

pub fn census_entries(c: &Census) -> Vec<FixtureEntry> {
    c.iter()
        .flat_map(|(s, v)| v.iter().map(move |(w, d)| FixtureEntry::from_diagram(*s, w, d)))
        .collect()
}

/// Line-by-line differences between two record lists.
pub fn diff_entries(expected: &[FixtureEntry], actual: &[FixtureEntry]) -> Vec<String> {
    let mut out = Vec::new();
    for (k, pair) in expected.iter().zip_longest(actual).enumerate() {
        match pair {
            itertools::EitherOrBoth::Both(e, a) if e == a => {}
            itertools::EitherOrBoth::Both(e, a) => out.push(format!("{}: expected {e}\n{}: got      {a}", k + 1, k + 1)),
            itertools::EitherOrBoth::Left(e) => out.push(format!("{}: missing  {e}", k + 1)),
            itertools::EitherOrBoth::Right(a) => out.push(format!("{}: extra    {a}", k + 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CAP;
    use std::collections::BTreeSet;

    fn el(t: DynkinType, s: &str) -> CoxeterElement {
        CoxeterElement::parse(t, s).unwrap()
    }

    #[test]
    fn sigma_and_chi_examples() {
        let t = DynkinType::d(5);
        assert_eq!(sigma(&el(t, "-1,2,-5,-4,-3")).unwrap(), ShapeSigma::new(2, -5, 0));
        // R = {-5, 3, 4}
        assert_eq!(chi(&el(t, "-1,2,-5,3,4")).unwrap(), vec![0, 0, 2, 2, 1]);
        assert!(CoxeterElement::parse(t, "1,2,-5,3,4").is_err());
        let s1 = CoxeterElement::simple_reflection(t, 1).unwrap();
        assert_eq!(sigma(&s1).unwrap(), ShapeSigma::new(2, 1, 0));
        assert!(sigma(&CoxeterElement::identity(t)).is_err());
        assert!(sigma(&CoxeterElement::identity(DynkinType::a(3))).is_err());
    }

    #[test]
    fn shape_counts() {
        assert_eq!(shape_count(ShapeSigma::new(5, -4, 3), 5).unwrap(), 8);
        assert_eq!(shape_count(ShapeSigma::new(2, 1, 0), 5).unwrap(), 1);
        assert_eq!(shape_count(ShapeSigma::new(4, -5, 1), 5).unwrap(), 6);
        assert!(shape_count(ShapeSigma::new(2, 0, 0), 5).is_err());
        assert!(shape_count(ShapeSigma::new(6, 1, 0), 5).is_err());
    }

    #[test]
    fn global_counts() {
        assert_eq!(global_count(DynkinType::a(3)), 11);
        assert_eq!(global_count(DynkinType::a(8)), 502);
        assert_eq!(global_count(DynkinType::d(5)), 157);
        for n in 4..=6 {
            let total: u64 = feasible_shapes(n).iter().map(|s| shape_count(*s, n).unwrap()).sum();
            assert_eq!(u128::from(total), global_count(DynkinType::d(n)));
        }
    }

    #[test]
    fn census_d4_and_d5() {
        assert_eq!(census(DynkinType::d(4), DEFAULT_CAP).unwrap().values().map(Vec::len).sum::<usize>(), 44);
        let c = census(DynkinType::d(5), DEFAULT_CAP).unwrap();
        assert_eq!(c.values().map(Vec::len).sum::<usize>(), 157);
        assert_eq!(c.keys().copied().collect::<Vec<_>>(), feasible_shapes(5));
        for (s, v) in &c {
            assert_eq!(v.len() as u64, shape_count(*s, 5).unwrap(), "{s}");
        }
        assert!(census(DynkinType::a(4), DEFAULT_CAP).is_err());
    }

    #[test]
    fn chi_is_injective_and_matches_product() {
        for n in [4, 5] {
            let t = DynkinType::d(n);
            let mut by_shape: BTreeMap<ShapeSigma, BTreeSet<ChiVector>> = BTreeMap::new();
            let mut all = BTreeSet::new();
            for w in join_irreducibles(t, DEFAULT_CAP).unwrap() {
                let c = chi(&w).unwrap();
                assert!(all.insert(c.clone()));
                by_shape.entry(sigma(&w).unwrap()).or_default().insert(c);
            }
            for s in feasible_shapes(n) {
                let product: BTreeSet<ChiVector> = s
                    .chi_factors(n)
                    .unwrap()
                    .into_iter()
                    .multi_cartesian_product()
                    .collect();
                assert_eq!(by_shape[&s], product, "{s}");
            }
        }
    }

    #[test]
    fn fixture_line_round_trip() {
        let line = "sigma=2,-5,0 window=-1,2,-5,-4,-3 symbols=-4,-3,-2,-1,1 arrows=-4>-3;-3>-2;-1>-2;1>-2";
        let e: FixtureEntry = line.parse().unwrap();
        assert_eq!(e.to_string(), line);
        let single: FixtureEntry = "sigma=2,1,0 window=2,1,3,4,5 symbols=1 arrows=".parse().unwrap();
        assert!(single.arrows.is_empty());
        assert!("sigma=1,2 window=1 symbols= arrows=".parse::<FixtureEntry>().is_err());
        assert!("sigma=2,1,0 window=x symbols= arrows=".parse::<FixtureEntry>().is_err());
    }
}
