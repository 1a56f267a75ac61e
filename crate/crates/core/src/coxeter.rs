//! Coxeter groups of types A and D as (signed) permutation groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of the Dynkin diagram. Type D uses `-1` for the second fork vertex.
pub type Vertex = i32;

pub const DEFAULT_CAP: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse {
                token: other.to_string(),
                reason: "expected A or D".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::D => 2,
        };
        if rank < min || rank > 60 {
            return Err(Error::Domain(format!(
                "rank {rank} out of range for type {family:?}"
            )));
        }
        Ok(DynkinType { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid type A rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("valid type D rank")
    }

    pub fn is_a(&self) -> bool {
        self.family == Family::A
    }

    /// Length of a window: n+1 in type A, n in type D.
    pub fn window_len(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => self.rank,
        }
    }

    /// Vertices in the order used for printing: `-1` first in type D.
    pub fn vertices(&self) -> Vec<Vertex> {
        let n = self.rank as i32;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::D => std::iter::once(-1).chain(1..n).collect(),
        }
    }

    pub fn is_vertex(&self, v: Vertex) -> bool {
        let n = self.rank as i32;
        match self.family {
            Family::A => (1..=n).contains(&v),
            Family::D => v == -1 || (1..n).contains(&v),
        }
    }

    /// Edges of the Dynkin diagram, oriented from the smaller end of the branch.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.rank as i32;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                if n == 2 {
                    return vec![];
                }
                let mut e = vec![(1, 2), (-1, 2)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    pub fn group_order(&self) -> u64 {
        let fact: u64 = (1..=self.window_len() as u64).product();
        match self.family {
            Family::A => fact,
            Family::D => fact << (self.rank - 1),
        }
    }

    pub fn reflection_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
        }
    }

    /// All reflections in a fixed order; used for bitmask indexing.
    pub fn reflections(&self) -> Vec<Reflection> {
        let m = self.window_len() as i32;
        let mut out = Vec::new();
        for a in 2..=m {
            match self.family {
                Family::A => out.extend((1..a).map(|b| Reflection { a, b })),
                Family::D => out.extend(
                    (1 - a..a)
                        .filter(|&b| b != 0)
                        .map(|b| Reflection { a, b }),
                ),
            }
        }
        out
    }

    /// Index of a reflection in [`DynkinType::reflections`].
    pub fn reflection_index(&self, t: Reflection) -> usize {
        let a = t.a as usize;
        match self.family {
            Family::A => (a - 1) * (a - 2) / 2 + (t.b as usize - 1),
            Family::D => {
                // reflections with first entry < a: sum_{k=2}^{a-1} 2(k-1) = (a-1)(a-2)
                let base = (a - 1) * (a - 2);
                let off = if t.b < 0 {
                    (t.b + a as i32 - 1) as usize
                } else {
                    (t.b + a as i32 - 2) as usize
                };
                base + off
            }
        }
    }
}

/// A reflection `(a b)` in type A, or `(-a -b)(a b)` in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reflection {
    pub a: i32,
    pub b: i32,
}

impl Reflection {
    /// Normalizes the transposition of `x` and `y` (and of `-x`, `-y` in type D).
    pub fn from_pair(family: Family, x: i32, y: i32) -> Reflection {
        match family {
            Family::A => Reflection {
                a: x.max(y),
                b: x.min(y),
            },
            Family::D => {
                if x.abs() > y.abs() {
                    Reflection {
                        a: x.abs(),
                        b: y * x.signum(),
                    }
                } else {
                    Reflection {
                        a: y.abs(),
                        b: x * y.signum(),
                    }
                }
            }
        }
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

/// An element in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterElement {
    dynkin: DynkinType,
    window: Vec<i32>,
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window.iter().join(","))
    }
}

pub fn parse_window(s: &str) -> Result<Vec<i32>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(Error::Parse {
            token: String::new(),
            reason: "empty window".into(),
        });
    }
    s.split(',')
        .map(|tok| {
            let t = tok.trim();
            t.parse::<i32>().map_err(|_| Error::Parse {
                token: t.to_string(),
                reason: "expected a signed integer".into(),
            })
        })
        .collect()
}

impl CoxeterElement {
    pub fn new(dynkin: DynkinType, window: Vec<i32>) -> Result<Self> {
        let m = dynkin.window_len();
        if window.len() != m {
            return Err(Error::InvalidWindow(format!(
                "{dynkin} needs {m} entries, got {}",
                window.len()
            )));
        }
        let mut seen = vec![false; m + 1];
        for &x in &window {
            let ax = x.unsigned_abs() as usize;
            if x == 0 || ax > m || seen[ax] || (dynkin.is_a() && x < 0) {
                return Err(Error::InvalidWindow(format!(
                    "entry {x} is out of range or repeated in {}",
                    window.iter().join(",")
                )));
            }
            seen[ax] = true;
        }
        if !dynkin.is_a() && window.iter().filter(|&&x| x < 0).count() % 2 == 1 {
            return Err(Error::InvalidWindow(format!(
                "{} has an odd number of negative entries",
                window.iter().join(",")
            )));
        }
        Ok(CoxeterElement { dynkin, window })
    }

    pub fn parse(dynkin: DynkinType, s: &str) -> Result<Self> {
        Self::new(dynkin, parse_window(s)?)
    }

    pub fn identity(dynkin: DynkinType) -> Self {
        CoxeterElement {
            dynkin,
            window: (1..=dynkin.window_len() as i32).collect(),
        }
    }

    /// The longest element.
    pub fn longest(dynkin: DynkinType) -> Self {
        let m = dynkin.window_len() as i32;
        let window = match dynkin.family {
            Family::A => (1..=m).rev().collect(),
            Family::D if m % 2 == 0 => (1..=m).map(|i| -i).collect(),
            Family::D => (1..=m).map(|i| if i == 1 { 1 } else { -i }).collect(),
        };
        CoxeterElement { dynkin, window }
    }

    pub fn simple_reflection(dynkin: DynkinType, i: Vertex) -> Result<Self> {
        if !dynkin.is_vertex(i) {
            return Err(Error::NotAVertex {
                vertex: i,
                dynkin: dynkin.to_string(),
            });
        }
        let mut w = Self::identity(dynkin);
        if i == -1 {
            w.window[0] = -2;
            w.window[1] = -1;
        } else {
            w.window.swap(i as usize - 1, i as usize);
        }
        Ok(w)
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i` in `±[1, m]`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (pos, &v) in self.window.iter().enumerate() {
            let p = pos as i32 + 1;
            inv[v.unsigned_abs() as usize - 1] = if v < 0 { -p } else { p };
        }
        CoxeterElement {
            dynkin: self.dynkin,
            window: inv,
        }
    }

    /// `(self * v)(i) = self(v(i))`.
    pub fn multiply(&self, v: &CoxeterElement) -> Result<Self> {
        if self.dynkin != v.dynkin {
            return Err(Error::Mismatch(
                self.dynkin.to_string(),
                v.dynkin.to_string(),
            ));
        }
        Ok(CoxeterElement {
            dynkin: self.dynkin,
            window: v.window.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    /// `self * s_i`, i.e. the window with positions moved by `s_i`.
    pub fn times_simple(&self, i: Vertex) -> Self {
        let mut w = self.window.clone();
        if i == -1 {
            let (x, y) = (w[0], w[1]);
            w[0] = -y;
            w[1] = -x;
        } else {
            w.swap(i as usize - 1, i as usize);
        }
        CoxeterElement {
            dynkin: self.dynkin,
            window: w,
        }
    }

    pub fn inversions(&self) -> BTreeSet<Reflection> {
        let inv = self.inverse();
        self.dynkin
            .reflections()
            .into_iter()
            .filter(|t| inv.apply(t.a) < inv.apply(t.b))
            .collect()
    }

    /// Inversion set as a bitmask over [`DynkinType::reflections`].
    pub fn inversion_mask(&self) -> u128 {
        assert!(self.dynkin.reflection_count() <= 128);
        let inv = self.inverse();
        self.dynkin
            .reflections()
            .into_iter()
            .enumerate()
            .filter(|(_, t)| inv.apply(t.a) < inv.apply(t.b))
            .fold(0u128, |m, (k, _)| m | (1u128 << k))
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    pub fn is_descent(&self, d: Vertex) -> bool {
        if d == -1 {
            -self.window[0] > self.window[1]
        } else {
            self.window[d as usize - 1] > self.window[d as usize]
        }
    }

    /// Descents in ascending order (`-1` first in type D).
    pub fn descents(&self) -> Vec<Vertex> {
        self.dynkin
            .vertices()
            .into_iter()
            .filter(|&d| self.is_descent(d))
            .collect()
    }

    pub fn weak_leq(&self, w: &CoxeterElement) -> Result<bool> {
        if self.dynkin != w.dynkin {
            return Err(Error::Mismatch(
                self.dynkin.to_string(),
                w.dynkin.to_string(),
            ));
        }
        Ok(self.inversions().is_subset(&w.inversions()))
    }

    pub fn join_irreducible_type(&self) -> Option<Vertex> {
        match self.descents().as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }

    /// The cover reflection `w s_d w^{-1}` of a descent `d`.
    pub fn cover_reflection(&self, d: Vertex) -> Reflection {
        let (x, y) = if d == -1 {
            (self.window[0], -self.window[1])
        } else {
            (self.window[d as usize - 1], self.window[d as usize])
        };
        Reflection::from_pair(self.dynkin.family, x, y)
    }

    pub fn cover_reflections(&self) -> BTreeSet<Reflection> {
        self.descents()
            .into_iter()
            .map(|d| self.cover_reflection(d))
            .collect()
    }

    /// `w([from, to])` as a set of values; empty when `from > to`.
    pub fn image(&self, from: i32, to: i32) -> BTreeSet<i32> {
        (from..=to).map(|i| self.apply(i)).collect()
    }

    /// The R-set `w([|l|+1, m])` of a join-irreducible of type `l`.
    pub fn r_set(&self) -> Option<BTreeSet<i32>> {
        let l = self.join_irreducible_type()?;
        Some(self.image(l.abs() + 1, self.window.len() as i32))
    }
}

/// All elements of the group, lexicographic on windows.
pub fn enumerate_group(dynkin: DynkinType, cap: usize) -> Result<Vec<CoxeterElement>> {
    let order = dynkin.group_order();
    if order > cap as u64 {
        return Err(Error::Capacity { order, cap });
    }
    let m = dynkin.window_len() as i32;
    let perms = (1..=m).permutations(m as usize);
    let mut out = Vec::with_capacity(order as usize);
    match dynkin.family {
        Family::A => out.extend(perms.map(|window| CoxeterElement { dynkin, window })),
        Family::D => {
            for p in perms {
                for signs in 0u32..(1 << m) {
                    if signs.count_ones() % 2 == 1 {
                        continue;
                    }
                    let window = p
                        .iter()
                        .enumerate()
                        .map(|(k, &x)| if signs >> k & 1 == 1 { -x } else { x })
                        .collect();
                    out.push(CoxeterElement { dynkin, window });
                }
            }
            out.sort();
        }
    }
    Ok(out)
}
