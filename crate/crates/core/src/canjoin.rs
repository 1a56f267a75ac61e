//! Canonical join representations from closed formulas, and the
//! reconstruction of a join-irreducible element from its R-set.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterElement, DynkinType, Family, Vertex};
use crate::error::{Error, Result};

pub type ValueSet = BTreeSet<i32>;

/// Which formula produced `R_d` in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DCase {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentDatum {
    pub d: Vertex,
    pub a: i32,
    pub b: i32,
    pub x: ValueSet,
    pub case: Option<DCase>,
    pub r: ValueSet,
    pub element: CoxeterElement,
}

/// `[x, y]`, empty when `x > y`.
pub fn interval(x: i32, y: i32) -> ValueSet {
    (x..=y).collect()
}

fn negated(s: &ValueSet) -> ValueSet {
    s.iter().map(|v| -v).collect()
}

fn plus_minus(s: &ValueSet) -> ValueSet {
    s.iter().flat_map(|&v| [v, -v]).collect()
}

fn show(s: &ValueSet) -> String {
    format!("{{{}}}", s.iter().join(","))
}

/// The unique join-irreducible element with the given R-set.
pub fn jirr_from_r(t: DynkinType, r: &ValueSet) -> Result<CoxeterElement> {
    let n = t.rank as i32;
    let bad = || Error::NotAnRSet(show(r));
    match t.family {
        Family::A => {
            if r.is_empty() || r.len() > t.rank || r.iter().any(|&v| v < 1 || v > n + 1) {
                return Err(bad());
            }
            let left: Vec<i32> = (1..=n + 1).filter(|v| !r.contains(v)).collect();
            if left.last() < r.first() {
                return Err(bad());
            }
            let window = left.into_iter().chain(r.iter().copied()).collect();
            CoxeterElement::new(t, window)
        }
        Family::D => {
            let abs: BTreeSet<i32> = r.iter().map(|v| v.abs()).collect();
            if r.is_empty()
                || r.len() >= t.rank
                || abs.len() != r.len()
                || r.iter().any(|&v| v == 0 || v.abs() > n)
            {
                return Err(bad());
            }
            let k = t.rank - r.len();
            let mut left: Vec<i32> = (1..=n).filter(|v| !abs.contains(v)).collect();
            if r.iter().filter(|&&v| v < 0).count() % 2 == 1 {
                left[0] = -left[0];
            }
            let window = left.into_iter().chain(r.iter().copied()).collect();
            let w = CoxeterElement::new(t, window)?;
            match w.descents().as_slice() {
                [d] if d.unsigned_abs() as usize == k && (*d > 0 || k == 1) => Ok(w),
                _ => Err(bad()),
            }
        }
    }
}

/// One row per descent: the data `a_d`, `b_d`, `X_d`, `R_d` and the
/// join-irreducible `w_d` of the canonical join representation.
pub fn decompose(w: &CoxeterElement) -> Result<Vec<DescentDatum>> {
    w.descents()
        .into_iter()
        .map(|d| descent_datum(w, d))
        .collect()
}

/// The canonical join representation of `w`.
pub fn cjr_direct(w: &CoxeterElement) -> Result<BTreeSet<CoxeterElement>> {
    Ok(decompose(w)?.into_iter().map(|dd| dd.element).collect())
}

pub fn descent_datum(w: &CoxeterElement, d: Vertex) -> Result<DescentDatum> {
    let t = w.dynkin();
    let m = t.window_len() as i32;
    let a = w.apply(d);
    let b = w.apply(d.abs() + 1);
    let x = w.image(d.abs() + 1, m);
    let (case, r, expected_left) = match t.family {
        Family::A => {
            let r: ValueSet = interval(b, a - 1)
                .intersection(&x)
                .copied()
                .chain(interval(a + 1, m))
                .collect();
            let left: ValueSet = interval(1, b - 1)
                .into_iter()
                .chain(interval(b + 1, a).difference(&x).copied())
                .collect();
            (None, r, left)
        }
        Family::D => {
            let (case, r, left) = d_formulas(w, d, a, b, &x)?;
            (Some(case), r, left)
        }
    };
    let element = jirr_from_r(t, &r).map_err(|e| {
        Error::Consistency(format!("descent {d} of {w}: R_d = {} ({e})", show(&r)))
    })?;
    let l = element.join_irreducible_type().expect("jirr_from_r is join-irreducible");
    let left: ValueSet = (1..=l.abs()).map(|k| element.apply(k).abs()).collect();
    if left != expected_left {
        return Err(Error::Consistency(format!(
            "descent {d} of {w}: left values {} differ from the predicted {}",
            show(&left),
            show(&expected_left)
        )));
    }
    Ok(DescentDatum {
        d,
        a,
        b,
        x,
        case,
        r,
        element,
    })
}

fn d_formulas(
    w: &CoxeterElement,
    d: Vertex,
    a: i32,
    b: i32,
    x: &ValueSet,
) -> Result<(DCase, ValueSet, ValueSet)> {
    let n = w.dynkin().rank as i32;
    let neg_x = negated(x);
    let pm_x = plus_minus(x);
    let in_pm_range = |v: i32| (a..=n).contains(&v) || (a..=n).contains(&-v);
    let case_a = a + b < 0 && (1..=d.abs()).all(|k| in_pm_range(w.apply(k)));
    if case_a && b >= -1 {
        return Err(Error::Consistency(format!(
            "case (A) at descent {d} of {w} with b_d = {b}"
        )));
    }
    let tail = interval(-b + 1, n);
    let mid = interval(a + 1, -b - 1);
    let low = interval(b, a - 1);
    Ok(if case_a {
        if a > 0 {
            let r: ValueSet = std::iter::once(-a)
                .chain(plus_minus(&interval(1, a - 1)).intersection(x).copied())
                .chain(mid.difference(&neg_x).copied())
                .chain(tail)
                .collect();
            let left = interval(a + 1, -b).intersection(&neg_x).copied().collect();
            (DCase::A, r, left)
        } else {
            let r = interval(-a, -b - 1)
                .difference(&neg_x)
                .copied()
                .chain(tail)
                .collect();
            let left = interval(1, -a - 1)
                .into_iter()
                .chain(interval(-a + 1, -b).intersection(&neg_x).copied())
                .collect();
            (DCase::A, r, left)
        }
    } else if a + b > 0 {
        let r = low
            .intersection(x)
            .copied()
            .chain(interval(a + 1, n))
            .collect();
        let left = if b > 0 {
            interval(1, b - 1)
                .into_iter()
                .chain(interval(b + 1, a).difference(x).copied())
                .collect()
        } else {
            interval(1, -b - 1)
                .difference(&pm_x)
                .copied()
                .chain(interval(-b + 1, a).difference(x).copied())
                .collect()
        };
        (DCase::B, r, left)
    } else {
        let r = low
            .intersection(x)
            .copied()
            .chain(mid.difference(&neg_x).copied())
            .chain(tail)
            .collect();
        let left = interval(1, a).difference(&pm_x).copied().collect();
        (DCase::B, r, left)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_group, DEFAULT_CAP};
    use crate::lattice::GroupPoset;

    fn el(t: DynkinType, s: &str) -> CoxeterElement {
        CoxeterElement::parse(t, s).unwrap()
    }

    fn set(v: &[i32]) -> ValueSet {
        v.iter().copied().collect()
    }

    #[test]
    fn jirr_from_r_examples() {
        let a8 = DynkinType::a(8);
        assert_eq!(
            jirr_from_r(a8, &set(&[3, 5, 6, 7, 8])).unwrap(),
            el(a8, "1,2,4,9,3,5,6,7,8")
        );
        let r: ValueSet = std::iter::once(1).chain(3..=9).collect();
        assert_eq!(
            jirr_from_r(a8, &r).unwrap(),
            CoxeterElement::simple_reflection(a8, 1).unwrap()
        );
        let d9 = DynkinType::d(9);
        assert_eq!(
            jirr_from_r(d9, &set(&[6, 7, 9])).unwrap(),
            el(d9, "1,2,3,4,5,8,6,7,9")
        );
        assert!(jirr_from_r(a8, &set(&[7, 8, 9])).is_err());
        assert!(jirr_from_r(d9, &set(&[2, -2])).is_err());
        assert!(jirr_from_r(d9, &ValueSet::new()).is_err());
    }

    #[test]
    fn r_set_round_trip() {
        for t in [
            DynkinType::a(3),
            DynkinType::a(5),
            DynkinType::d(4),
            DynkinType::d(5),
        ] {
            let g = enumerate_group(t, DEFAULT_CAP).unwrap();
            let mut found = 0;
            for w in &g {
                if let Some(r) = w.r_set() {
                    assert_eq!(jirr_from_r(t, &r).unwrap(), *w);
                    found += 1;
                }
            }
            // every subset that reconstructs must come from a jirr
            let m = t.window_len() as i32;
            let values: Vec<i32> = match t.family {
                Family::A => (1..=m).collect(),
                Family::D => (1..=m).flat_map(|v| [v, -v]).collect(),
            };
            let mut rebuilt = 0;
            for bits in 0u32..(1 << values.len()) {
                let r: ValueSet = (0..values.len())
                    .filter(|&k| bits >> k & 1 == 1)
                    .map(|k| values[k])
                    .collect();
                if let Ok(w) = jirr_from_r(t, &r) {
                    assert_eq!(w.r_set().unwrap(), r);
                    rebuilt += 1;
                }
            }
            assert_eq!(rebuilt, found, "{t}");
        }
    }

    #[test]
    fn a8_table() {
        let t = DynkinType::a(8);
        let w = el(t, "4,9,3,6,2,8,5,1,7");
        let rows = decompose(&w).unwrap();
        let got: Vec<(i32, i32, i32, ValueSet, String)> = rows
            .iter()
            .map(|r| (r.d, r.a, r.b, r.r.clone(), r.element.to_string()))
            .collect();
        let expect = vec![
            (2, 9, 3, set(&[3, 5, 6, 7, 8]), "1,2,4,9,3,5,6,7,8".to_string()),
            (4, 6, 2, set(&[2, 5, 7, 8, 9]), "1,3,4,6,2,5,7,8,9".to_string()),
            (6, 8, 5, set(&[5, 7, 9]), "1,2,3,4,6,8,5,7,9".to_string()),
            (7, 5, 1, set(&[1, 6, 7, 8, 9]), "2,3,4,5,1,6,7,8,9".to_string()),
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn d9_table() {
        let t = DynkinType::d(9);
        let w = el(t, "5,3,-7,4,-6,-8,9,-1,2");
        let rows = decompose(&w).unwrap();
        let rs: Vec<(Vertex, ValueSet)> = rows.iter().map(|r| (r.d, r.r.clone())).collect();
        assert_eq!(
            rs,
            vec![
                (1, set(&[3, 4, 6, 7, 8, 9])),
                (2, set(&[-3, -1, 2, 4, 5, 8, 9])),
                (4, set(&[-6, -1, 2, 5, 7, 8, 9])),
                (5, set(&[6, 7, 9])),
                (7, set(&[-1, 2])),
            ]
        );
        assert_eq!(rows[3].element, el(t, "1,2,3,4,5,8,6,7,9"));
    }

    #[test]
    fn small_examples() {
        let a2 = DynkinType::a(2);
        assert_eq!(
            cjr_direct(&el(a2, "3,2,1")).unwrap(),
            [el(a2, "1,3,2"), el(a2, "2,1,3")].into()
        );
        assert!(cjr_direct(&CoxeterElement::identity(a2)).unwrap().is_empty());
        assert!(cjr_direct(&CoxeterElement::identity(DynkinType::d(5)))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn agrees_with_oracle() {
        for t in [
            DynkinType::a(2),
            DynkinType::a(3),
            DynkinType::a(4),
            DynkinType::d(4),
        ] {
            let p = GroupPoset::new(t, DEFAULT_CAP).unwrap();
            for w in p.elements() {
                let direct = cjr_direct(w).unwrap();
                assert_eq!(direct.len(), w.descents().len());
                assert_eq!(direct, p.cjr_oracle(w).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn formulas_consistent_d5_d6() {
        // decompose checks the predicted left window and the case (A) guard
        for t in [DynkinType::d(5), DynkinType::d(6)] {
            for w in enumerate_group(t, DEFAULT_CAP).unwrap() {
                let rows = decompose(&w).unwrap();
                assert_eq!(rows.len(), w.descents().len());
                for r in &rows {
                    let abs: BTreeSet<i32> = r.r.iter().map(|v| v.abs()).collect();
                    assert_eq!(abs.len(), r.r.len());
                    assert!(!r.r.is_empty() && r.r.len() < t.rank);
                }
            }
        }
    }

    #[test]
    fn jirr_decomposes_to_itself() {
        for t in [DynkinType::a(5), DynkinType::d(5)] {
            for w in enumerate_group(t, DEFAULT_CAP).unwrap() {
                if w.join_irreducible_type().is_some() {
                    assert_eq!(cjr_direct(&w).unwrap(), [w.clone()].into());
                }
            }
        }
    }
}
