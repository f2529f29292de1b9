//! Class functions and exact character tables.

mod dixon;
mod modp;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::group::{FinGroup, GroupError};
use crate::perm::Permutation;


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("character table verification failed: {0}")]
    Verification(String),
}

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class in the group's canonical class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FinGroup>,
    values: Vec<Cyclotomic>,
}

fn same_group(a: &Arc<FinGroup>, b: &Arc<FinGroup>) -> bool {
    Arc::ptr_eq(a, b) || a.same_elements(b)
}

impl ClassFunction {
    pub fn new(group: Arc<FinGroup>, values: Vec<Cyclotomic>) -> Result<Self, CharacterError> {
        let expected = group.conjugacy_classes().len();
        if values.len() != expected {
            return Err(CharacterError::LengthMismatch {
                expected,
                got: values.len(),
            });
        }
        Ok(ClassFunction { group, values })
    }

    pub fn trivial(group: Arc<FinGroup>) -> Self {
        let k = group.conjugacy_classes().len();
        ClassFunction {
            group,
            values: vec![Cyclotomic::one(); k],
        }
    }

    /// Builds a class function from its values on every element; the
    /// caller guarantees constancy on classes.
    pub fn from_fn(group: Arc<FinGroup>, f: impl Fn(&Permutation) -> Cyclotomic) -> Self {
        let values = group
            .conjugacy_classes()
            .representatives()
            .iter()
            .map(f)
            .collect();
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    /// Values aligned with `group().conjugacy_classes()`.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at_class(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn eval(&self, g: &Permutation) -> Result<&Cyclotomic, CharacterError> {
        let c = self.group.class_index(g).ok_or_else(|| GroupError::NotAMember {
            element: g.to_string(),
        })?;
        Ok(&self.values[c])
    }

    /// Value at the identity (class 0, since the identity is the least element).
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == Cyclotomic::one())
    }

    pub fn conj(&self) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scalar_mul(q)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CharacterError> {
        if !same_group(&self.group, &other.group) {
            return Err(CharacterError::GroupMismatch);
        }
        let other = other.aligned_to(&self.group);
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other).map(|(a, b)| a + b).collect(),
        })
    }

    /// Values re-indexed by the classes of `group` (which has the same
    /// elements but may be a distinct allocation).
    fn aligned_to(&self, group: &Arc<FinGroup>) -> Vec<Cyclotomic> {
        if Arc::ptr_eq(group, &self.group) {
            return self.values.clone();
        }
        group
            .conjugacy_classes()
            .representatives()
            .iter()
            .map(|r| self.eval(r).expect("same element set").clone())
            .collect()
    }

    /// `(1/|G|) Σ_g α(g)·conj(β(g))`, computed classwise.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic, CharacterError> {
        if !same_group(&self.group, &other.group) {
            return Err(CharacterError::GroupMismatch);
        }
        let other = other.aligned_to(&self.group);
        let sizes = self.group.conjugacy_classes().sizes();
        let sum: Cyclotomic = self
            .values
            .iter()
            .zip(&other)
            .zip(&sizes)
            .map(|((a, b), &h)| (a * &b.conj()).scalar_mul(&int_ratio(h as i64, 1)))
            .sum();
        Ok(sum.scalar_mul(&int_ratio(1, self.group.order() as i64)))
    }

    /// Induction to a supergroup `g`:
    /// `Ind(η)(x) = (|C_G(x)|/|K|) Σ_{k ∈ K ∩ x^G} η(k)`.
    pub fn induce(&self, g: &Arc<FinGroup>) -> Result<Self, CharacterError> {
        let k = &self.group;
        if !k.is_subgroup_of(g) {
            return Err(GroupError::NotASubgroup(format!(
                "cannot induce from a group of order {} to one of order {}",
                k.order(),
                g.order()
            ))
            .into());
        }
        let g_classes = g.conjugacy_classes();
        let k_classes = k.conjugacy_classes();
        // sums[G-class] accumulates |c|·η(c) over the K-classes c inside it
        let mut sums = vec![Cyclotomic::zero(); g_classes.len()];
        for (kc, rep) in k_classes.representatives().iter().enumerate() {
            let gc = g.class_index(rep).expect("subgroup element");
            let size = k_classes.size(kc) as i64;
            sums[gc] += self.values[kc].scalar_mul(&int_ratio(size, 1));
        }
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(gc, s)| {
                let centralizer = g.order() / g_classes.size(gc) as u64;
                s.scalar_mul(&int_ratio(centralizer as i64, k.order() as i64))
            })
            .collect();
        Ok(ClassFunction {
            group: g.clone(),
            values,
        })
    }

    /// Restriction to a subgroup `k`.
    pub fn restrict(&self, k: &Arc<FinGroup>) -> Result<Self, CharacterError> {
        if !k.is_subgroup_of(&self.group) {
            return Err(GroupError::NotASubgroup(format!(
                "cannot restrict from a group of order {} to one of order {}",
                self.group.order(),
                k.order()
            ))
            .into());
        }
        let values = k
            .conjugacy_classes()
            .representatives()
            .iter()
            .map(|r| self.eval(r).cloned())
            .collect::<Result<_, _>>()?;
        Ok(ClassFunction {
            group: k.clone(),
            values,
        })
    }

    /// The conjugate class function `(x⊳η)(y) = η(x⁻¹⊳y)` on `x⊳K`.
    pub fn conjugate_by(&self, x: &Permutation) -> Result<Self, CharacterError> {
        let target = Arc::new(self.group.conjugated(x)?);
        self.conjugate_onto(x, &target)
    }

    /// As [`conjugate_by`](Self::conjugate_by) with the target group `x⊳K`
    /// supplied by the caller.
    pub fn conjugate_onto(
        &self,
        x: &Permutation,
        target: &Arc<FinGroup>,
    ) -> Result<Self, CharacterError> {
        let xinv = x.inverse();
        let values = target
            .conjugacy_classes()
            .representatives()
            .iter()
            .map(|y| self.eval(&xinv.conjugate(y).map_err(GroupError::from)?).cloned())
            .collect::<Result<_, CharacterError>>()?;
        Ok(ClassFunction {
            group: target.clone(),
            values,
        })
    }

    /// `ν_m(η) = (1/|H|) Σ_h η(h^m)`.
    pub fn classical_indicator(&self, m: u64) -> Cyclotomic {
        let classes = self.group.conjugacy_classes();
        let mut counts = vec![0i64; classes.len()];
        for (c, rep) in classes.representatives().iter().enumerate() {
            let target = self
                .group
                .class_index(&rep.pow((m % rep.order()) as i64))
                .expect("power lies in group");
            counts[target] += classes.size(c) as i64;
        }
        let sum: Cyclotomic = counts
            .iter()
            .zip(&self.values)
            .filter(|(&n, _)| n != 0)
            .map(|(&n, v)| v.scalar_mul(&int_ratio(n, 1)))
            .sum();
        sum.scalar_mul(&int_ratio(1, self.group.order() as i64))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.values == other.aligned_to(&self.group)
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.values).finish()
    }
}

/// `{"classes": ["()", "(1 2)", …], "values": [...]}`.
impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let classes: Vec<String> = self
            .group
            .conjugacy_classes()
            .representatives()
            .iter()
            .map(|r| r.to_string())
            .collect();
        let mut st = serializer.serialize_struct("ClassFunction", 2)?;
        st.serialize_field("classes", &classes)?;
        st.serialize_field("values", &self.values)?;
        st.end()
    }
}

pub(crate) fn int_ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// The irreducible characters of a group in canonical order: by degree, the
/// trivial character first, then descending lexicographic order of the value
/// arrays.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FinGroup>,
    irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn compute(group: Arc<FinGroup>) -> Result<Self, CharacterError> {
        let mut irreducibles = dixon::irreducible_characters(&group)?;
        irreducibles.sort_by(canonical_order);
        let table = CharacterTable {
            group,
            irreducibles,
        };
        table.verify()?;
        Ok(table)
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.group.conjugacy_classes().sizes()
    }

    /// Checks both orthogonality relations and `Σ χ(1)² = |G|` exactly.
    pub fn verify(&self) -> Result<(), CharacterError> {
        let k = self.group.conjugacy_classes().len();
        let fail = |what: String| Err(CharacterError::Verification(what));
        if self.irreducibles.len() != k {
            return fail(format!("{} characters for {k} classes", self.irreducibles.len()));
        }
        let degree_sum: Cyclotomic = self
            .irreducibles
            .iter()
            .map(|c| c.degree() * c.degree())
            .sum();
        if degree_sum != Cyclotomic::from_integer(self.group.order() as i64) {
            return fail(format!("Σ χ(1)² = {degree_sum}"));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let expected = Cyclotomic::from_integer(i64::from(i == j));
                if ip != expected {
                    return fail(format!("⟨χ{i}, χ{j}⟩ = {ip}"));
                }
            }
        }
        let sizes = self.class_sizes();
        for r in 0..k {
            for s in r..k {
                let sum: Cyclotomic = self
                    .irreducibles
                    .iter()
                    .map(|c| &c.values[r] * &c.values[s].conj())
                    .sum();
                let expected = if r == s {
                    Cyclotomic::from_integer((self.group.order() / sizes[r]) as i64)
                } else {
                    Cyclotomic::zero()
                };
                if sum != expected {
                    return fail(format!("column relation ({r}, {s}) gives {sum}"));
                }
            }
        }
        Ok(())
    }
}

fn canonical_order(a: &ClassFunction, b: &ClassFunction) -> Ordering {
    a.degree()
        .lex_cmp(b.degree())
        .then_with(|| b.is_trivial().cmp(&a.is_trivial()))
        .then_with(|| {
            for (x, y) in a.values.iter().zip(&b.values) {
                match y.lex_cmp(x) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::rational;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn int(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn table(g: FinGroup) -> CharacterTable {
        CharacterTable::compute(Arc::new(g)).unwrap()
    }

    fn ints(c: &ClassFunction) -> Vec<i64> {
        c.values()
            .iter()
            .map(|v| v.as_integer().unwrap().try_into().unwrap())
            .collect()
    }

    /// Brute-force induction straight from the defining sum over `G`.
    fn induce_brute(eta: &ClassFunction, g: &Arc<FinGroup>) -> Vec<Cyclotomic> {
        let k = eta.group();
        g.conjugacy_classes()
            .representatives()
            .iter()
            .map(|x| {
                let s: Cyclotomic = g
                    .elements()
                    .iter()
                    .filter_map(|y| {
                        let c = y.inverse().conjugate(x).unwrap();
                        k.contains(&c).then(|| eta.eval(&c).unwrap().clone())
                    })
                    .sum();
                s.scalar_mul(&rational(1, k.order() as i64))
            })
            .collect()
    }

    #[test]
    fn s4_table_matches_printed_matrix() {
        let t = table(FinGroup::symmetric(4).unwrap());
        let cols = ["()", "(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4)"];
        let printed = [
            [1, 1, 1, 1, 1],
            [1, -1, 1, 1, -1],
            [2, 0, -1, 2, 0],
            [3, 1, 0, -1, -1],
            [3, -1, 0, -1, 1],
        ];
        for (chi, row) in t.irreducibles().iter().zip(printed) {
            for (c, want) in cols.iter().zip(row) {
                assert_eq!(*chi.eval(&p(c, 4)).unwrap(), int(want), "column {c}");
            }
        }
        assert_eq!(t.class_sizes(), vec![1, 6, 8, 3, 6]);
    }

    #[test]
    fn small_tables() {
        let t = table(FinGroup::generate(3, &[]).unwrap());
        assert_eq!(t.len(), 1);
        assert!(t.irreducibles()[0].is_trivial());

        let t = table(FinGroup::cyclic_on_first(3, 3).unwrap());
        let gen = p("(1 2 3)", 3);
        let vals: Vec<Cyclotomic> = t
            .irreducibles()
            .iter()
            .map(|c| c.eval(&gen).unwrap().clone())
            .collect();
        assert_eq!(
            vals,
            vec![int(1), Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(3, 2)]
        );

        let t = table(FinGroup::symmetric(3).unwrap());
        assert_eq!(ints(&t.irreducibles()[2]), vec![2, 0, -1]);
    }

    #[test]
    fn tables_with_irrational_values() {
        for g in [
            FinGroup::cyclic_on_first(9, 9).unwrap(),
            FinGroup::cyclic_on_first(5, 5).unwrap(),
            // A5 has values (1 ± √5)/2
            FinGroup::generate(5, &[p("(1 2 3)", 5), p("(1 2 3 4 5)", 5)]).unwrap(),
            // C4 × C3 with disjoint supports
            FinGroup::generate(7, &[p("(1 2 3 4)", 7), p("(5 6 7)", 7)]).unwrap(),
        ] {
            let t = table(g);
            t.verify().unwrap();
        }
        let a5 = table(FinGroup::generate(5, &[p("(1 2 3)", 5), p("(1 2 3 4 5)", 5)]).unwrap());
        let degrees: Vec<i64> = a5
            .irreducibles()
            .iter()
            .map(|c| c.degree().as_integer().unwrap().try_into().unwrap())
            .collect();
        assert_eq!(degrees, vec![1, 3, 3, 4, 5]);
        let golden = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
        assert!(a5.irreducibles()[1..3]
            .iter()
            .any(|c| c.values().iter().any(|v| *v == &golden + &int(1))));
    }

    #[test]
    fn larger_symmetric_tables() {
        for n in 5..=6 {
            let t = table(FinGroup::symmetric(n).unwrap());
            assert!(t.irreducibles().iter().flat_map(|c| c.values()).all(Cyclotomic::is_integer));
        }
    }

    #[test]
    fn inner_products() {
        let t = table(FinGroup::symmetric(4).unwrap());
        for chi in t.irreducibles() {
            assert_eq!(chi.inner_product(chi).unwrap(), int(1));
        }
        let s2 = table(FinGroup::symmetric(2).unwrap());
        let ip = s2.irreducibles()[0].inner_product(&s2.irreducibles()[1]).unwrap();
        assert_eq!(ip, int(0));

        let s4 = t.group().clone();
        let s3 = Arc::new(FinGroup::symmetric_on_first(3, 4).unwrap());
        let ind = ClassFunction::trivial(s3).induce(&s4).unwrap();
        assert_eq!(ind.inner_product(&ClassFunction::trivial(s4)).unwrap(), int(1));

        let other = table(FinGroup::symmetric(3).unwrap());
        assert_eq!(
            t.irreducibles()[0].inner_product(&other.irreducibles()[0]),
            Err(CharacterError::GroupMismatch)
        );
    }

    #[test]
    fn induction_matches_brute_force() {
        let s3 = Arc::new(FinGroup::symmetric(3).unwrap());
        let c2 = Arc::new(FinGroup::symmetric_on_first(2, 3).unwrap());
        let ind = ClassFunction::trivial(c2.clone()).induce(&s3).unwrap();
        assert_eq!(*ind.degree(), int(3));
        assert_eq!(ind.values(), induce_brute(&ClassFunction::trivial(c2), &s3).as_slice());

        let s5 = Arc::new(FinGroup::symmetric(5).unwrap());
        let c5 = Arc::new(FinGroup::cyclic_on_first(5, 5).unwrap());
        for eta in CharacterTable::compute(c5).unwrap().irreducibles() {
            let ind = eta.induce(&s5).unwrap();
            assert_eq!(ind.values(), induce_brute(eta, &s5).as_slice());
            assert_eq!(*ind.degree(), int(24));
        }
        assert!(ClassFunction::trivial(s5).induce(&s3).is_err());
    }

    #[test]
    fn restriction_decomposes_by_brute_force() {
        let s4 = table(FinGroup::symmetric(4).unwrap());
        let s3g = Arc::new(FinGroup::symmetric_on_first(3, 4).unwrap());
        let s3 = CharacterTable::compute(s3g.clone()).unwrap();
        let res = s4.irreducibles()[2].restrict(&s3g).unwrap();
        // brute-force restricted values on every element of S3
        for x in s3g.elements() {
            assert_eq!(res.eval(x).unwrap(), s4.irreducibles()[2].eval(x).unwrap());
        }
        let mults: Vec<Cyclotomic> = s3
            .irreducibles()
            .iter()
            .map(|c| res.inner_product(c).unwrap())
            .collect();
        assert_eq!(mults, vec![int(0), int(0), int(1)]);
    }

    #[test]
    fn conjugation_of_characters() {
        let k = Arc::new(FinGroup::cyclic_on_first(3, 4).unwrap());
        let t = CharacterTable::compute(k.clone()).unwrap();
        let x = p("(1 4)", 4);
        for eta in t.irreducibles() {
            let c = eta.conjugate_by(&x).unwrap();
            for y in k.elements() {
                let xy = x.conjugate(y).unwrap();
                assert_eq!(c.eval(&xy).unwrap(), eta.eval(y).unwrap());
            }
            // a centralizing element acts trivially
            let central = eta.conjugate_by(&p("(1 2 3)", 4)).unwrap();
            assert_eq!(&central, eta);
        }
    }

    #[test]
    fn classical_indicators() {
        let s2 = table(FinGroup::symmetric(2).unwrap());
        let sign = &s2.irreducibles()[1];
        assert_eq!(sign.classical_indicator(1), int(0));
        assert_eq!(sign.classical_indicator(2), int(1));
        assert_eq!(s2.irreducibles()[0].classical_indicator(7), int(1));

        let s3 = table(FinGroup::symmetric(3).unwrap());
        let two = &s3.irreducibles()[2];
        // brute force over the six elements
        let brute: Cyclotomic = s3
            .group()
            .elements()
            .iter()
            .map(|h| two.eval(&h.pow(2)).unwrap().clone())
            .sum::<Cyclotomic>()
            .scalar_mul(&rational(1, 6));
        assert_eq!(brute, int(1));
        assert_eq!(two.classical_indicator(2), brute);

        let c3 = table(FinGroup::cyclic_on_first(3, 3).unwrap());
        assert_eq!(c3.irreducibles()[1].classical_indicator(2), int(0));
        for chi in c3.irreducibles() {
            assert_eq!(chi.classical_indicator(3), *chi.degree());
        }
    }

    #[test]
    fn serialization() {
        let s2 = table(FinGroup::symmetric(2).unwrap());
        let v = serde_json::to_value(&s2.irreducibles()[1]).unwrap();
        assert_eq!(v["classes"], serde_json::json!(["()", "(1 2)"]));
        assert_eq!(v["values"], serde_json::json!(["1", "-1"]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn frobenius_reciprocity(pair in 0usize..2, i in 0usize..7, j in 0usize..7) {
            let (small, big) = if pair == 0 { (3, 4) } else { (4, 5) };
            let g = Arc::new(FinGroup::symmetric(big).unwrap());
            let k = Arc::new(FinGroup::symmetric_on_first(small, big).unwrap());
            let tg = CharacterTable::compute(g.clone()).unwrap();
            let tk = CharacterTable::compute(k.clone()).unwrap();
            let eta = &tk.irreducibles()[i % tk.len()];
            let chi = &tg.irreducibles()[j % tg.len()];
            let lhs = eta.induce(&g).unwrap().inner_product(chi).unwrap();
            let rhs = eta.inner_product(&chi.restrict(&k).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(lhs.is_integer());
            let index = (g.order() / k.order()) as i64;
            prop_assert_eq!(eta.induce(&g).unwrap().degree().clone(), eta.degree() * &int(index));
        }

        #[test]
        fn indicator_at_exponent_is_degree(n in 2usize..=5, i in 0usize..7) {
            let t = table(FinGroup::symmetric(n).unwrap());
            let chi = &t.irreducibles()[i % t.len()];
            let e = t.group().exponent();
            prop_assert_eq!(chi.classical_indicator(e), chi.degree().clone());
        }
    }
}
