//! The weak order on an enumerated group: join, meet, Hasse diagram and
//! a brute-force canonical join representation.

use std::collections::{BTreeSet, HashMap};

use crate::coxeter::{enumerate_group, CoxeterElement, DynkinType};
use crate::error::{Error, Result};

/// Largest number of join-irreducibles below `w` for which
/// [`GroupPoset::verify_cjr_definition`] enumerates antichains.
pub const CJR_DEFINITION_CAP: usize = 16;

pub struct GroupPoset {
    dynkin: DynkinType,
    elements: Vec<CoxeterElement>,
    masks: Vec<u128>,
    index: HashMap<CoxeterElement, usize>,
}

fn below(x: u128, y: u128) -> bool {
    x & !y == 0
}

impl GroupPoset {
    pub fn new(dynkin: DynkinType, cap: usize) -> Result<Self> {
        if dynkin.reflection_count() > 128 {
            return Err(Error::Unsupported(format!("{dynkin} has too many reflections")));
        }
        let elements = enumerate_group(dynkin, cap)?;
        let masks = elements.iter().map(|w| w.inversion_mask()).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        Ok(GroupPoset {
            dynkin,
            elements,
            masks,
            index,
        })
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn elements(&self) -> &[CoxeterElement] {
        &self.elements
    }

    fn idx(&self, w: &CoxeterElement) -> Result<usize> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::Mismatch(w.dynkin().to_string(), self.dynkin.to_string()))
    }

    pub fn mask(&self, w: &CoxeterElement) -> Result<u128> {
        Ok(self.masks[self.idx(w)?])
    }

    pub fn leq(&self, u: &CoxeterElement, w: &CoxeterElement) -> Result<bool> {
        Ok(below(self.mask(u)?, self.mask(w)?))
    }

    // Minimal element above `m`; must lie below every other such element.
    fn least_above(&self, m: u128) -> Result<usize> {
        let best = (0..self.elements.len())
            .filter(|&k| below(m, self.masks[k]))
            .min_by_key(|&k| self.masks[k].count_ones())
            .ok_or_else(|| Error::Consistency("no upper bound".into()))?;
        let bm = self.masks[best];
        if let Some(k) = (0..self.elements.len())
            .find(|&k| below(m, self.masks[k]) && !below(bm, self.masks[k]))
        {
            return Err(Error::Consistency(format!(
                "upper bounds {} and {} are incomparable",
                self.elements[best], self.elements[k]
            )));
        }
        Ok(best)
    }

    fn greatest_below(&self, m: u128) -> Result<usize> {
        let best = (0..self.elements.len())
            .filter(|&k| below(self.masks[k], m))
            .max_by_key(|&k| self.masks[k].count_ones())
            .ok_or_else(|| Error::Consistency("no lower bound".into()))?;
        let bm = self.masks[best];
        if let Some(k) = (0..self.elements.len())
            .find(|&k| below(self.masks[k], m) && !below(self.masks[k], bm))
        {
            return Err(Error::Consistency(format!(
                "lower bounds {} and {} are incomparable",
                self.elements[best], self.elements[k]
            )));
        }
        Ok(best)
    }

    pub fn join(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        let m = self.mask(u)? | self.mask(v)?;
        Ok(self.elements[self.least_above(m)?].clone())
    }

    pub fn meet(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        let m = self.mask(u)? & self.mask(v)?;
        Ok(self.elements[self.greatest_below(m)?].clone())
    }

    /// Join of a family; the identity for the empty family.
    pub fn join_all<'a, I>(&self, items: I) -> Result<CoxeterElement>
    where
        I: IntoIterator<Item = &'a CoxeterElement>,
    {
        let mut m = 0u128;
        for w in items {
            // the join of u, v is above the union of inversion sets, and the
            // least such element is the join of the family
            m |= self.mask(w)?;
        }
        Ok(self.elements[self.least_above(m)?].clone())
    }

    /// Cover pairs `(w, w s_d)` for every descent `d` of `w`.
    pub fn hasse_edges(&self) -> Vec<(CoxeterElement, CoxeterElement)> {
        self.elements
            .iter()
            .flat_map(|w| {
                w.descents()
                    .into_iter()
                    .map(move |d| (w.clone(), w.times_simple(d)))
            })
            .collect()
    }

    /// Checks that every pair has a join and a meet.
    pub fn check_lattice(&self) -> Result<()> {
        for &x in &self.masks {
            for &y in &self.masks {
                self.least_above(x | y)?;
                self.greatest_below(x & y)?;
            }
        }
        Ok(())
    }

    /// For each cover reflection `t` of `w`, the minimum of `{v <= w : t in inv(v)}`.
    pub fn cjr_oracle(&self, w: &CoxeterElement) -> Result<BTreeSet<CoxeterElement>> {
        let wm = self.mask(w)?;
        let mut out = BTreeSet::new();
        for t in w.cover_reflections() {
            let bit = 1u128 << self.dynkin.reflection_index(t);
            let cands: Vec<usize> = (0..self.elements.len())
                .filter(|&k| self.masks[k] & bit != 0 && below(self.masks[k], wm))
                .collect();
            let best = *cands
                .iter()
                .min_by_key(|&&k| self.masks[k].count_ones())
                .ok_or_else(|| Error::Consistency(format!("{t} is not an inversion of {w}")))?;
            if let Some(&k) = cands
                .iter()
                .find(|&&k| !below(self.masks[best], self.masks[k]))
            {
                return Err(Error::Consistency(format!(
                    "{} and {} are both minimal for {t} below {w}",
                    self.elements[best], self.elements[k]
                )));
            }
            out.insert(self.elements[best].clone());
        }
        Ok(out)
    }

    /// Checks that `u` is the canonical join representation of `w` from the
    /// definition: `u` joins to `w`, is irredundant, and lies below every
    /// other irredundant representation elementwise.
    pub fn verify_cjr_definition(
        &self,
        w: &CoxeterElement,
        u: &BTreeSet<CoxeterElement>,
    ) -> Result<bool> {
        let wm = self.mask(w)?;
        let joins_to = |set: &[u128]| -> Result<bool> {
            let m = set.iter().fold(0u128, |a, b| a | b);
            Ok(self.masks[self.least_above(m)?] == wm)
        };
        let um: Vec<u128> = u.iter().map(|x| self.mask(x)).collect::<Result<_>>()?;
        let irredundant = |set: &[u128]| -> Result<bool> {
            if !joins_to(set)? {
                return Ok(false);
            }
            for skip in 0..set.len() {
                let rest: Vec<u128> = set
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &m)| m)
                    .collect();
                if joins_to(&rest)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        // (a) and (b); with (a) fixed, dropping one element is enough for (b)
        // since any smaller subset joins below a one-element-smaller one.
        if !irredundant(&um)? {
            return Ok(false);
        }
        let jirr: Vec<u128> = (0..self.elements.len())
            .filter(|&k| {
                below(self.masks[k], wm) && self.elements[k].join_irreducible_type().is_some()
            })
            .map(|k| self.masks[k])
            .collect();
        if jirr.len() > CJR_DEFINITION_CAP {
            return Err(Error::Capacity {
                order: 1u64 << jirr.len(),
                cap: 1usize << CJR_DEFINITION_CAP,
            });
        }
        // (c) against every irredundant antichain of join-irreducibles below w
        for sub in 0u32..(1u32 << jirr.len()) {
            let v: Vec<u128> = (0..jirr.len())
                .filter(|&k| sub >> k & 1 == 1)
                .map(|k| jirr[k])
                .collect();
            let antichain = v
                .iter()
                .enumerate()
                .all(|(i, &x)| v.iter().enumerate().all(|(j, &y)| i == j || !below(x, y)));
            if !antichain || !irredundant(&v)? {
                continue;
            }
            let refines = um.iter().all(|&x| v.iter().any(|&y| below(x, y)));
            if !refines {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
