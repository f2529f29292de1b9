//! Finite permutation groups held as fully enumerated element sets.
//!
//! Every group keeps its elements sorted in the canonical (lexicographic
//! one-line) order, so "first unvisited element" sweeps produce canonical
//! minimal representatives for classes, orbits and double cosets.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num::integer::lcm;
use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Default hard cap on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: u64 },
    #[error("{element} is not an element of the group")]
    NotAMember { element: String },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("action leaves the domain: {0}")]
    ActionLeavesDomain(String),
    #[error("orbit-stabilizer mismatch for orbit of {0}")]
    OrbitStabilizer(String),
    #[error("invalid group specification {spec:?}: {reason}")]
    Spec { spec: String, reason: String },
}

/// Conjugacy classes of a [`FinGroup`], sorted by their minimal element.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    reps: Vec<Permutation>,
    members: Vec<Vec<u32>>,
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn representative(&self, class: usize) -> &Permutation {
        &self.reps[class]
    }

    /// Element indices (into [`FinGroup::elements`]) of a class.
    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[class]
    }

    pub fn size(&self, class: usize) -> usize {
        self.members[class].len()
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.members.iter().map(|m| m.len() as u64).collect()
    }

    /// Class of the element with the given element index.
    pub fn class_of_index(&self, index: usize) -> usize {
        self.class_of[index] as usize
    }
}

/// A subgroup of a symmetric group, stored by full enumeration.
pub struct FinGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

impl Clone for FinGroup {
    fn clone(&self) -> Self {
        FinGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            classes: self.classes.clone(),
        }
    }
}

fn closure(
    degree: usize,
    generators: &[Permutation],
    cap: u64,
) -> Result<Vec<Permutation>, GroupError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = &x * g;
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

impl FinGroup {
    /// Enumerates the group generated by `generators` (default order cap).
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<Self, GroupError> {
        Self::generate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(
        degree: usize,
        generators: &[Permutation],
        cap: u64,
    ) -> Result<Self, GroupError> {
        if degree > crate::perm::MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree).into());
        }
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let elements = closure(degree, &gens, cap)?;
        Ok(Self::from_sorted(degree, gens, elements))
    }

    fn from_sorted(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        FinGroup {
            degree,
            generators,
            elements,
            index,
            classes: OnceLock::new(),
        }
    }

    /// Builds a group from a set already known to be a subgroup, choosing a
    /// small generating set greedily in canonical order.
    fn from_closed_subset(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::new();
        span.insert(Permutation::identity(degree));
        for e in &elements {
            if span.len() == elements.len() {
                break;
            }
            if !span.contains(e) {
                generators.push(e.clone());
                span = closure(degree, &generators, u64::MAX)
                    .expect("uncapped closure")
                    .into_iter()
                    .collect();
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        Self::from_sorted(degree, generators, elements)
    }

    /// Builds a group from an explicit element list, verifying closure.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self, GroupError> {
        for e in &elements {
            if e.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: e.degree(),
                }
                .into());
            }
        }
        let mut distinct = elements.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let not_closed =
            || GroupError::NotASubgroup("element list is not closed under multiplication".into());
        let span = closure(degree, &distinct, distinct.len() as u64 + 1).map_err(|_| not_closed())?;
        if span != distinct {
            return Err(not_closed());
        }
        Ok(Self::from_closed_subset(degree, distinct))
    }

    /// Full symmetric group on `{1..n}`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        Self::symmetric_on_first(n, n)
    }

    /// Symmetric group on `{1..k}` inside degree `n`, fixing `k+1..n`.
    pub fn symmetric_on_first(k: usize, degree: usize) -> Result<Self, GroupError> {
        if k > degree {
            return Err(GroupError::Spec {
                spec: format!("S{k}"),
                reason: format!("does not fit in degree {degree}"),
            });
        }
        let mut gens = Vec::new();
        if k >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[1, 2]])?);
            let cycle: Vec<usize> = (1..=k).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle])?);
        }
        Self::generate(degree, &gens)
    }

    /// Cyclic group generated by `(1 2 … k)` inside degree `n`.
    pub fn cyclic_on_first(k: usize, degree: usize) -> Result<Self, GroupError> {
        if k > degree {
            return Err(GroupError::Spec {
                spec: format!("C{k}"),
                reason: format!("does not fit in degree {degree}"),
            });
        }
        let cycle: Vec<usize> = (1..=k).collect();
        let g = Permutation::from_cycles(degree, &[&cycle])?;
        Self::generate(degree, &[g])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in canonical order; the identity is always first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    fn require_member(&self, p: &Permutation) -> Result<(), GroupError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            }
            .into());
        }
        if !self.contains(p) {
            return Err(GroupError::NotAMember {
                element: p.to_string(),
            });
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &FinGroup) -> bool {
        self.degree == other.degree
            && other.order() % self.order() == 0
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// Same element set (possibly different generators).
    pub fn same_elements(&self, other: &FinGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Subgroup of elements satisfying `pred`; `pred` must cut out a subgroup.
    pub fn subgroup_where(&self, pred: impl Fn(&Permutation) -> bool) -> FinGroup {
        let elements = self.elements.iter().filter(|e| pred(e)).cloned().collect();
        Self::from_closed_subset(self.degree, elements)
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(self.elements[start].clone());
            let mut list = vec![start as u32];
            class_of[start] = c;
            let mut k = 0;
            while k < list.len() {
                let x = &self.elements[list[k] as usize];
                for g in &self.generators {
                    let y = g.conjugate_unchecked(x);
                    let j = self.index[&y] as usize;
                    if class_of[j] == u32::MAX {
                        class_of[j] = c;
                        list.push(j as u32);
                    }
                }
                k += 1;
            }
            list.sort_unstable();
            members.push(list);
        }
        ConjugacyClasses {
            reps,
            members,
            class_of,
        }
    }

    /// Class index of a group element.
    pub fn class_index(&self, p: &Permutation) -> Option<usize> {
        let i = self.index_of(p)?;
        Some(self.conjugacy_classes().class_of_index(i))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.conjugacy_classes()
            .representatives()
            .iter()
            .fold(1, |acc, r| lcm(acc, r.order()))
    }

    pub fn centralizer(&self, x: &Permutation) -> Result<FinGroup, GroupError> {
        self.require_member(x)?;
        Ok(self.subgroup_where(|g| &(g * x) == &(x * g)))
    }

    /// Elements of `self` commuting with every element of `sub`.
    pub fn group_centralizer(&self, sub: &FinGroup) -> Result<FinGroup, GroupError> {
        self.check_subgroup(sub)?;
        let gens = sub.generators();
        Ok(self.subgroup_where(|g| gens.iter().all(|s| &(g * s) == &(s * g))))
    }

    /// Elements of `self` normalizing `sub`.
    pub fn normalizer(&self, sub: &FinGroup) -> Result<FinGroup, GroupError> {
        if sub.degree != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: sub.degree,
            }
            .into());
        }
        let gens = sub.generators();
        Ok(self.subgroup_where(|g| gens.iter().all(|s| sub.contains(&g.conjugate_unchecked(s)))))
    }

    fn check_subgroup(&self, sub: &FinGroup) -> Result<(), GroupError> {
        if !sub.is_subgroup_of(self) {
            return Err(GroupError::NotASubgroup(format!(
                "group of order {} is not contained in group of order {}",
                sub.order(),
                self.order()
            )));
        }
        Ok(())
    }

    /// `x ⊳ self = x · self · x⁻¹`.
    pub fn conjugated(&self, x: &Permutation) -> Result<FinGroup, GroupError> {
        if x.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: x.degree(),
            }
            .into());
        }
        let mut elements: Vec<Permutation> = self
            .elements
            .iter()
            .map(|e| x.conjugate_unchecked(e))
            .collect();
        elements.sort_unstable();
        let generators = self
            .generators
            .iter()
            .map(|g| x.conjugate_unchecked(g))
            .collect();
        Ok(Self::from_sorted(self.degree, generators, elements))
    }

    pub fn intersection(&self, other: &FinGroup) -> Result<FinGroup, GroupError> {
        if other.degree != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            }
            .into());
        }
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small.subgroup_where(|e| big.contains(e)))
    }

    /// `Stab_self(dH) = {h ∈ self : d⁻¹ h d ∈ self}`, i.e. `self ∩ d⊳self`.
    pub fn coset_stabilizer(&self, d: &Permutation) -> Result<FinGroup, GroupError> {
        if d.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: d.degree(),
            }
            .into());
        }
        let dinv = d.inverse();
        Ok(self.subgroup_where(|h| self.contains(&dinv.conjugate_unchecked(h))))
    }

    /// Canonical-minimal representatives of the left cosets `x·sub`.
    pub fn left_transversal(&self, sub: &FinGroup) -> Result<Vec<Permutation>, GroupError> {
        self.check_subgroup(sub)?;
        let mut marked = vec![false; self.elements.len()];
        let mut reps = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if marked[i] {
                continue;
            }
            reps.push(x.clone());
            for s in sub.elements() {
                marked[self.index[&(x * s)] as usize] = true;
            }
        }
        Ok(reps)
    }

    /// Double cosets `left \ self / right`, swept in canonical element order.
    pub fn double_cosets(
        &self,
        left: &FinGroup,
        right: &FinGroup,
    ) -> Result<DoubleCosetDecomposition, GroupError> {
        self.check_subgroup(left)?;
        self.check_subgroup(right)?;
        let n = self.elements.len();
        let mut coset_of = vec![u32::MAX; n];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if coset_of[start] != u32::MAX {
                continue;
            }
            let c = representatives.len() as u32;
            let x = &self.elements[start];
            representatives.push(x.clone());
            let mut size = 0u64;
            for h in left.elements() {
                let hx = h * x;
                let j = self.index[&hx] as usize;
                if coset_of[j] == c {
                    continue;
                }
                // hx·right is a right-coset block: all new or all seen.
                for k in right.elements() {
                    let y = &hx * k;
                    let j = self.index[&y] as usize;
                    if coset_of[j] != c {
                        coset_of[j] = c;
                        size += 1;
                    }
                }
            }
            sizes.push(size);
        }
        Ok(DoubleCosetDecomposition {
            representatives,
            sizes,
            coset_of,
        })
    }
}

/// Partition of a group into double cosets.
#[derive(Debug, Clone)]
pub struct DoubleCosetDecomposition {
    representatives: Vec<Permutation>,
    sizes: Vec<u64>,
    coset_of: Vec<u32>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Double coset containing the element with the given index in the
    /// ambient group.
    pub fn coset_of_index(&self, element_index: usize) -> usize {
        self.coset_of[element_index] as usize
    }

    /// Double coset containing `x`, an element of the ambient group `g`.
    pub fn coset_of(&self, g: &FinGroup, x: &Permutation) -> Option<usize> {
        g.index_of(x).map(|i| self.coset_of_index(i))
    }
}

/// One orbit of a group action on a finite set of permutations.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub representative: Permutation,
    pub elements: Vec<Permutation>,
    pub stabilizer_order: u64,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Partitions `domain` into orbits of `acting` under `action(s, x)`.
///
/// Representatives are the canonical-minimal orbit members and orbits are
/// returned sorted by representative. Every orbit is checked against the
/// orbit-stabilizer identity.
pub fn orbits_under<F>(
    acting: &FinGroup,
    domain: &[Permutation],
    action: F,
) -> Result<Vec<Orbit>, GroupError>
where
    F: Fn(&Permutation, &Permutation) -> Permutation,
{
    let index: HashMap<&Permutation, usize> =
        domain.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; domain.len()];
    let mut orbits = Vec::new();
    for start in 0..domain.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let x = &domain[members[k]];
            for s in acting.generators() {
                let y = action(s, x);
                let j = *index.get(&y).ok_or_else(|| {
                    GroupError::ActionLeavesDomain(format!("{s} maps {x} to {y}"))
                })?;
                if !seen[j] {
                    seen[j] = true;
                    members.push(j);
                }
            }
            k += 1;
        }
        let mut elements: Vec<Permutation> = members.iter().map(|&i| domain[i].clone()).collect();
        elements.sort_unstable();
        let representative = elements[0].clone();
        let stabilizer_order = acting
            .elements()
            .iter()
            .filter(|s| action(s, &representative) == representative)
            .count() as u64;
        if stabilizer_order * elements.len() as u64 != acting.order() {
            return Err(GroupError::OrbitStabilizer(representative.to_string()));
        }
        orbits.push(Orbit {
            representative,
            elements,
            stabilizer_order,
        });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(orbits)
}

/// Parses the shared group grammar: `S<n>`, `C<n>`, or
/// `gens[<degree>]: <cycles>; <cycles>; …`.
///
/// With `ambient = Some(n)` the group is embedded in degree `n` (fixing the
/// extra points); otherwise the degree is the one the spec implies.
pub fn parse_group_spec(
    text: &str,
    ambient: Option<usize>,
    cap: u64,
) -> Result<FinGroup, GroupError> {
    let spec_err = |reason: String| GroupError::Spec {
        spec: text.to_string(),
        reason,
    };
    let t = text.trim();
    let parse_n = |digits: &str| -> Result<usize, GroupError> {
        digits
            .trim()
            .parse::<usize>()
            .map_err(|_| spec_err(format!("bad size {digits:?}")))
    };
    let (degree, gens) = if let Some(rest) = t.strip_prefix("gens[") {
        let close = rest
            .find(']')
            .ok_or_else(|| spec_err("missing ']'".into()))?;
        let own = parse_n(&rest[..close])?;
        let body = rest[close + 1..]
            .trim_start()
            .strip_prefix(':')
            .ok_or_else(|| spec_err("expected ':' after gens[<degree>]".into()))?;
        let degree = ambient.unwrap_or(own);
        if own > degree {
            return Err(spec_err(format!("degree {own} exceeds ambient degree {degree}")));
        }
        let mut gens = Vec::new();
        for piece in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            gens.push(Permutation::parse_cycles(piece, own)?.extend_to(degree)?);
        }
        (degree, gens)
    } else if let Some(rest) = t.strip_prefix('S') {
        let k = parse_n(rest)?;
        let degree = ambient.unwrap_or(k);
        return FinGroup::symmetric_on_first(k, degree).and_then(|g| cap_check(g, cap));
    } else if let Some(rest) = t.strip_prefix('C') {
        let k = parse_n(rest)?;
        let degree = ambient.unwrap_or(k);
        if k > degree {
            return Err(spec_err(format!("does not fit in degree {degree}")));
        }
        let cycle: Vec<usize> = (1..=k).collect();
        (degree, vec![Permutation::from_cycles(degree, &[&cycle])?])
    } else {
        return Err(spec_err("expected S<n>, C<n> or gens[<degree>]: …".into()));
    };
    FinGroup::generate_with_cap(degree, &gens, cap)
}

fn cap_check(g: FinGroup, cap: u64) -> Result<FinGroup, GroupError> {
    if g.order() > cap {
        return Err(GroupError::CapExceeded { cap });
    }
    Ok(g)
}
