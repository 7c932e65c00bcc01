//! Finite permutation groups: enumeration, conjugacy classes, center.
//!
//! Elements are stored as image arrays and multiplied left to right:
//! `g * h` first applies `g`, then `h`.

mod catalog;

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use hashbrown::HashMap;
use num_integer::Integer;
use thiserror::Error;

pub use catalog::{default_catalog, make_named_group, CatalogEntry, GroupSpec};

/// Default upper bound on the order of any group the toolkit will enumerate.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a permutation of 0..{degree}: {reason}")]
    InvalidPermutation { degree: usize, reason: &'static str },
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the bound {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("unknown group family `{0}`")]
    UnknownName(String),
    #[error("invalid parameters for `{name}`: {reason}")]
    InvalidParameters { name: String, reason: &'static str },
    #[error("`{name}` produced {found} elements, expected {expected}")]
    UnexpectedOrder {
        name: String,
        expected: usize,
        found: usize,
    },
}

/// A bijection of `{0, …, degree-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree {
                return Err(GroupError::InvalidPermutation {
                    degree,
                    reason: "image out of range",
                });
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(GroupError::InvalidPermutation {
                    degree,
                    reason: "repeated image",
                });
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                let x = x as usize;
                if x >= degree {
                    return Err(GroupError::InvalidPermutation {
                        degree,
                        reason: "cycle point out of range",
                    });
                }
                if core::mem::replace(&mut touched[x], true) {
                    return Err(GroupError::InvalidPermutation {
                        degree,
                        reason: "cycles are not disjoint",
                    });
                }
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Self { images }
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    /// Places `self` on the points `offset..offset+degree` of a domain of size `total`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Self { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| rhs.images[x as usize])
                .collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// The identity comes first; the order is fixed by the generator order.
pub fn enumerate_elements(
    degree: usize,
    generators: &[Permutation],
    bound: usize,
) -> Result<Vec<Permutation>, GroupError> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity, ());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in generators {
            let next = &elements[i] * s;
            if seen.contains_key(&next) {
                continue;
            }
            if elements.len() == bound {
                return Err(GroupError::OrderBoundExceeded { bound });
            }
            seen.insert(next.clone(), ());
            queue.push_back(elements.len());
            elements.push(next);
        }
    }
    Ok(elements)
}

/// A finite group given by permutation generators, with its elements enumerated.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generator_indices: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::with_bound(degree, generators, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(
        degree: usize,
        generators: Vec<Permutation>,
        bound: usize,
    ) -> Result<Self, GroupError> {
        let elements = enumerate_elements(degree, &generators, bound)?;
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        let generator_indices = generators.iter().map(|g| index[g]).collect();
        let inverses = elements.iter().map(|g| index[&g.inverse()]).collect();
        Ok(Self {
            degree,
            generators,
            elements,
            index,
            generator_indices,
            inverses,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of the identity element; always 0.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.elements[a] * &self.elements[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, exp: u64) -> usize {
        let mut result = self.identity();
        let mut base = a;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, i| acc.lcm(&self.element_order(i)))
    }

    pub fn is_abelian(&self) -> bool {
        self.generator_indices.iter().all(|&s| {
            self.generator_indices
                .iter()
                .all(|&t| self.mul(s, t) == self.mul(t, s))
        })
    }

    /// Elements commuting with every generator, in element order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| {
                self.generator_indices
                    .iter()
                    .all(|&s| self.mul(g, s) == self.mul(s, g))
            })
            .collect()
    }

    /// Orbits of the conjugation action, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> ConjugacyClassPartition {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut orbit = vec![start];
            class_of[start] = id;
            let mut cursor = 0;
            while cursor < orbit.len() {
                let h = orbit[cursor];
                cursor += 1;
                for &s in &self.generator_indices {
                    let conj = self.mul(self.mul(self.inverse(s), h), s);
                    if class_of[conj] == usize::MAX {
                        class_of[conj] = id;
                        orbit.push(conj);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let inverse_class = representatives
            .iter()
            .map(|&r| class_of[self.inverse(r)])
            .collect();
        ConjugacyClassPartition {
            classes,
            representatives,
            class_of,
            inverse_class,
        }
    }
}

/// Conjugacy classes of a [`FiniteGroup`], as sets of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassPartition {
    classes: Vec<Vec<usize>>,
    representatives: Vec<usize>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjugacyClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.len() as u64).collect()
    }
}

/// Direct product acting on the disjoint union of the two domains.
pub fn direct_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    bound: usize,
) -> Result<FiniteGroup, GroupError> {
    if g.order().checked_mul(h.order()).is_none_or(|n| n > bound) {
        return Err(GroupError::OrderBoundExceeded { bound });
    }
    let total = g.degree() + h.degree();
    let generators = g
        .generators()
        .iter()
        .map(|s| s.embed(0, total))
        .chain(h.generators().iter().map(|s| s.embed(g.degree(), total)))
        .collect();
    FiniteGroup::with_bound(total, generators, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        FiniteGroup::new(3, vec![t, c]).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn multiplication_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn s3_enumeration_and_classes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        let classes = g.conjugacy_classes();
        let mut sizes = classes.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.center(), vec![0]);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn bound_is_enforced() {
        let c = Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        assert_eq!(
            FiniteGroup::with_bound(7, vec![c.clone()], 6).unwrap_err(),
            GroupError::OrderBoundExceeded { bound: 6 }
        );
        assert_eq!(FiniteGroup::with_bound(7, vec![c], 7).unwrap().order(), 7);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = s3();
        let b = s3();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn display_cycles() {
        let p = Permutation::from_cycles(5, &[&[0, 2], &[1, 3, 4]]).unwrap();
        assert_eq!(alloc::format!("{p}"), "(0 2)(1 3 4)");
        assert_eq!(alloc::format!("{}", Permutation::identity(3)), "()");
    }
}
