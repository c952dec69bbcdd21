//! Cyclic groups, their subgroups and cosets, and vertex permutations.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a as usize, b as usize) as u64 * b
}

/// The minimal interface the cover construction needs from a voltage group.
pub trait VoltageGroup {
    type Element: Copy + Eq;

    fn identity(&self) -> Self::Element;
    fn add(&self, a: Self::Element, b: Self::Element) -> Self::Element;
    fn negate(&self, a: Self::Element) -> Self::Element;
    fn order(&self) -> usize;
}

/// `Z_m` under addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicGroup {
    modulus: usize,
}

impl CyclicGroup {
    pub fn new(modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("Z_0 is not a finite group".into()));
        }
        Ok(CyclicGroup { modulus })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.modulus
    }

    pub fn check(&self, a: usize) -> Result<usize> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::NotInGroup {
                element: a,
                modulus: self.modulus,
            })
        }
    }

    pub fn reduce(&self, a: i64) -> usize {
        a.rem_euclid(self.modulus as i64) as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.negate(b))
    }

    /// The subgroup `dZ_m`; `d` must divide `m`.
    pub fn subgroup(&self, step: usize) -> Result<Subgroup> {
        if step == 0 || !self.modulus.is_multiple_of(step) {
            return Err(Error::NotADivisor {
                divisor: step,
                modulus: self.modulus,
            });
        }
        Ok(Subgroup {
            modulus: self.modulus,
            step,
        })
    }

    /// The subgroup with `size` elements.
    pub fn subgroup_of_order(&self, size: usize) -> Result<Subgroup> {
        if size == 0 || !self.modulus.is_multiple_of(size) {
            return Err(Error::NotADivisor {
                divisor: size,
                modulus: self.modulus,
            });
        }
        self.subgroup(self.modulus / size)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            modulus: self.modulus,
            step: self.modulus,
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            modulus: self.modulus,
            step: 1,
        }
    }

    /// All subgroups, by increasing size.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        (1..=self.modulus)
            .rev()
            .filter(|d| self.modulus.is_multiple_of(*d))
            .map(|step| Subgroup {
                modulus: self.modulus,
                step,
            })
            .collect()
    }
}

impl VoltageGroup for CyclicGroup {
    type Element = usize;

    fn identity(&self) -> usize {
        0
    }

    fn add(&self, a: usize, b: usize) -> usize {
        (a + b) % self.modulus
    }

    fn negate(&self, a: usize) -> usize {
        (self.modulus - a % self.modulus) % self.modulus
    }

    fn order(&self) -> usize {
        self.modulus
    }
}

/// The subgroup `dZ_m = {0, d, 2d, ...}` of `Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    modulus: usize,
    step: usize,
}

impl Subgroup {
    pub fn parent(&self) -> CyclicGroup {
        CyclicGroup {
            modulus: self.modulus,
        }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn size(&self) -> usize {
        self.modulus / self.step
    }

    /// `[G : H]`, which equals the step `d`.
    pub fn index(&self) -> usize {
        self.step
    }

    pub fn is_trivial(&self) -> bool {
        self.step == self.modulus
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.modulus && a.is_multiple_of(self.step)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        (0..self.modulus).step_by(self.step)
    }

    pub fn coset(&self, a: usize) -> Coset {
        Coset {
            subgroup: *self,
            rep: a % self.step,
        }
    }

    /// The cosets in order of their representative.
    pub fn cosets(&self) -> Vec<Coset> {
        (0..self.step)
            .map(|rep| Coset {
                subgroup: *self,
                rep,
            })
            .collect()
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "{{0}}")
        } else {
            write!(f, "{}Z_{}", self.step, self.modulus)
        }
    }
}

pub fn cosets(subgroup: &Subgroup) -> Vec<Coset> {
    subgroup.cosets()
}

/// A coset `r + H`, identified by its minimal element `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    subgroup: Subgroup,
    rep: usize,
}

impl Coset {
    pub fn subgroup(&self) -> Subgroup {
        self.subgroup
    }

    pub fn representative(&self) -> usize {
        self.rep
    }

    pub fn members(&self) -> impl Iterator<Item = usize> {
        (self.rep..self.subgroup.modulus).step_by(self.subgroup.step)
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.subgroup.modulus && a % self.subgroup.step == self.rep
    }

    pub fn translate(&self, v: usize) -> Coset {
        self.subgroup.coset(self.rep + v % self.subgroup.modulus)
    }

    /// Whether `self` and `other` share an element. The cosets may belong to
    /// different subgroups: `(r + aZ) ∩ (s + bZ)` is non-empty iff
    /// `r ≡ s (mod gcd(a, b))`.
    pub fn meets(&self, other: &Coset) -> bool {
        debug_assert_eq!(self.subgroup.modulus, other.subgroup.modulus);
        let g = gcd(self.subgroup.step, other.subgroup.step);
        self.rep % g == other.rep % g
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

pub fn coset_translate(coset: &Coset, v: usize) -> Coset {
    coset.translate(v)
}

/// A bijection of `0..n`, stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(Error::NotAPermutation(n));
                }
                touched[a] = true;
                images[a] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut result = Permutation::identity(self.len());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles, including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Every cycle has the same length as the permutation's order, so no
    /// nontrivial power fixes a point.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.cycles().iter().all(|c| c.len() as u64 == order)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

pub fn permutation_order(p: &Permutation) -> u64 {
    p.order()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    /// Every element of the generated group, sorted.
    Complete(Vec<Permutation>),
    /// The group has more than `cap` elements; `partial` holds the
    /// `lower_bound` elements reached first, in breadth-first order.
    Overflow {
        lower_bound: usize,
        partial: Vec<Permutation>,
    },
}

impl Closure {
    pub fn elements(&self) -> Option<&[Permutation]> {
        match self {
            Closure::Complete(e) => Some(e),
            Closure::Overflow { .. } => None,
        }
    }
}

/// Breadth-first closure of `gens` under composition, stopping past `cap` elements.
/// An empty generator list on an unknown domain yields the identity on `domain`.
pub fn group_closure(domain: usize, gens: &[Permutation], cap: usize) -> Result<Closure> {
    if cap == 0 {
        return Err(Error::InvalidParameter(
            "closure cap must be positive".into(),
        ));
    }
    for g in gens {
        if g.len() != domain {
            return Err(Error::DomainMismatch(domain, g.len()));
        }
    }
    let id = Permutation::identity(domain);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                if seen.len() == cap {
                    return Ok(Closure::Overflow {
                        lower_bound: order.len(),
                        partial: order,
                    });
                }
                seen.insert(q.clone());
                order.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut elements = order;
    elements.sort();
    Ok(Closure::Complete(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn z(m: usize) -> CyclicGroup {
        CyclicGroup::new(m).unwrap()
    }

    fn members(c: &Coset) -> Vec<usize> {
        c.members().collect()
    }

    #[test]
    fn cosets_of_z6() {
        let g = z(6);
        let h = g.subgroup(3).unwrap();
        let cs: Vec<Vec<usize>> = h.cosets().iter().map(members).collect();
        assert_eq!(cs, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(g.trivial_subgroup().cosets().len(), 6);
        assert!(g
            .trivial_subgroup()
            .cosets()
            .iter()
            .all(|c| members(c).len() == 1));
        let whole = g.whole().cosets();
        assert_eq!(whole.len(), 1);
        assert_eq!(members(&whole[0]), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn translation() {
        let h = z(6).subgroup(3).unwrap();
        assert_eq!(members(&h.coset(0).translate(1)), vec![1, 4]);
        assert_eq!(h.coset(1).translate(3), h.coset(1));
        assert_eq!(members(&h.coset(2).translate(5)), vec![1, 4]);
        assert_eq!(coset_translate(&h.coset(4), 0).representative(), 1);
    }

    #[test]
    fn subgroup_validation() {
        assert!(CyclicGroup::new(0).is_err());
        assert!(z(6).subgroup(4).is_err());
        assert!(z(6).subgroup(0).is_err());
        assert_eq!(z(6).subgroup_of_order(2).unwrap().step(), 3);
        assert_eq!(z(12).subgroups().len(), 6);
        assert_eq!(z(6).subgroup(3).unwrap().to_string(), "3Z_6");
        assert_eq!(z(6).trivial_subgroup().to_string(), "{0}");
    }

    // exhaustive over m <= 12, every subgroup pair and element
    #[test]
    fn coset_identities_exhaustive() {
        for m in 1..=12 {
            let g = z(m);
            for h in g.subgroups() {
                let cs = h.cosets();
                assert_eq!(cs.len(), h.index());
                let mut union = BTreeSet::new();
                let mut total = 0;
                for c in &cs {
                    let mem: Vec<usize> = c.members().collect();
                    assert_eq!(mem[0], c.representative());
                    total += mem.len();
                    union.extend(mem);
                }
                assert_eq!(total, m);
                assert_eq!(union.len(), m);

                for c in &cs {
                    for a in 0..m {
                        for b in 0..m {
                            assert_eq!(c.translate(a).translate(b), c.translate(g.add(a, b)));
                        }
                        let brute: BTreeSet<usize> = c.members().map(|x| (x + a) % m).collect();
                        let fast: BTreeSet<usize> = c.translate(a).members().collect();
                        assert_eq!(brute, fast);
                    }
                }

                for h2 in g.subgroups() {
                    for k in &cs {
                        for l in h2.cosets() {
                            let ks: BTreeSet<usize> = k.members().collect();
                            let brute = l.members().any(|x| ks.contains(&x));
                            assert_eq!(k.meets(&l), brute);
                            for v in 0..m {
                                let lhs = k.translate(v).meets(&l);
                                let rhs = l.translate(g.negate(v)).meets(k);
                                assert_eq!(lhs, rhs, "m={m} K={k} H={l} v={v}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_orders() {
        assert_eq!(permutation_order(&Permutation::identity(5)), 1);
        let c5 = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(c5.order(), 5);
        let p = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert!(c5.is_semiregular());
        assert!(!p.is_semiregular());
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
    }

    #[test]
    fn permutation_laws() {
        let a = Permutation::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        let b = Permutation::from_images(vec![0, 3, 4, 1, 2]).unwrap();
        let c = Permutation::from_images(vec![4, 3, 2, 1, 0]).unwrap();
        let id = Permutation::identity(5);
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert_eq!(a.compose(&id), a);
        assert_eq!(a.compose(&a.inverse()), id);
        assert_eq!(a.compose(&b).apply(1), a.apply(b.apply(1)));
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn closure_sizes() {
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s4 = group_closure(4, &[t, c], DEFAULT_GROUP_CAP).unwrap();
        let elems = s4.elements().unwrap();
        assert_eq!(elems.len(), 24);
        for x in elems {
            assert!(elems.binary_search(&x.inverse()).is_ok());
            for y in elems {
                assert!(elems.binary_search(&x.compose(y)).is_ok());
            }
        }

        let empty = group_closure(3, &[], 10).unwrap();
        assert_eq!(empty, Closure::Complete(vec![Permutation::identity(3)]));

        // Aut(K_{3,3}): S_3 on each side plus the side swap
        let gens = vec![
            Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(6, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(6, &[&[3, 4]]).unwrap(),
            Permutation::from_cycles(6, &[&[3, 4, 5]]).unwrap(),
            Permutation::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap(),
        ];
        assert_eq!(
            group_closure(6, &gens, DEFAULT_GROUP_CAP)
                .unwrap()
                .elements()
                .unwrap()
                .len(),
            72
        );
        match group_closure(6, &gens, 10).unwrap() {
            Closure::Overflow {
                lower_bound,
                partial,
            } => {
                assert_eq!(lower_bound, 10);
                assert_eq!(partial.len(), 10);
            }
            other => panic!("expected overflow, got {other:?}"),
        }
        assert!(group_closure(5, &gens, 10).is_err());
    }
}
