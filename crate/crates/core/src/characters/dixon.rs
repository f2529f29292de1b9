//! Dixon–Schneider character tables.
//!
//! The central characters `ω_χ(K_j) = |K_j|·χ(g_j)/χ(1)` are the common
//! eigenvectors of the class-multiplication matrices. They are found over
//! `F_p` with `p ≡ 1 (mod exp G)`, then lifted to exact cyclotomic values by
//! decomposing each `χ|⟨g⟩` into eigenvalue multiplicities.

use std::sync::Arc;

use num::rational::BigRational;

use super::modp::{charpoly, choose_prime, inv_mod, nullspace, pow_mod, primitive_root, roots, rref};
use super::{CharacterError, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::group::FinGroup;

/// `class_of_power[r][l]` = class of `g_r^l` for `0 ≤ l < ord(g_r)`.
pub(crate) fn power_classes(group: &FinGroup) -> Vec<Vec<usize>> {
    let classes = group.conjugacy_classes();
    classes
        .representatives()
        .iter()
        .map(|g| {
            let o = g.order() as i64;
            (0..o)
                .map(|l| group.class_index(&g.pow(l)).expect("power lies in group"))
                .collect()
        })
        .collect()
}

/// `(M_j)_{r,s} = #{x ∈ K_j : x⁻¹·g_s ∈ K_r}`, reduced mod `p`.
fn class_matrix(group: &FinGroup, j: usize, p: u64) -> Vec<Vec<u64>> {
    let classes = group.conjugacy_classes();
    let k = classes.len();
    let mut m = vec![vec![0u64; k]; k];
    for s in 0..k {
        let gs = classes.representative(s);
        for &xi in classes.members(j) {
            let x = &group.elements()[xi as usize];
            let r = group.class_index(&(&x.inverse() * gs)).expect("closed");
            m[r][s] += 1;
        }
    }
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    m
}

/// A subspace of `F_p^k` held as an RREF basis.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(mut rows: Vec<Vec<u64>>, p: u64) -> Self {
        let pivots = rref(&mut rows, p);
        Subspace { basis: rows, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Splits an invariant subspace into eigenspaces of `m`.
    fn split(&self, m: &[Vec<u64>], p: u64) -> Result<Vec<Subspace>, CharacterError> {
        let d = self.dim();
        let k = m.len();
        // Column i of the restricted operator holds the coordinates of m·b_i.
        let mut a = vec![vec![0u64; d]; d];
        for (i, b) in self.basis.iter().enumerate() {
            let image: Vec<u64> = (0..k)
                .map(|r| m[r].iter().zip(b).fold(0, |acc, (x, y)| (acc + x * y) % p))
                .collect();
            for (row, &pc) in self.pivots.iter().enumerate() {
                a[row][i] = image[pc];
            }
        }
        let cp = charpoly(&a, p);
        let mut parts = Vec::new();
        let mut total = 0;
        for lambda in roots(&cp, p) {
            let shifted: Vec<Vec<u64>> = (0..d)
                .map(|r| {
                    (0..d)
                        .map(|c| if r == c { (a[r][c] + p - lambda) % p } else { a[r][c] })
                        .collect()
                })
                .collect();
            let coords = nullspace(&shifted, p);
            total += coords.len();
            let vectors: Vec<Vec<u64>> = coords
                .iter()
                .map(|c| {
                    (0..k)
                        .map(|col| {
                            self.basis
                                .iter()
                                .zip(c)
                                .fold(0, |acc, (b, &ci)| (acc + b[col] * ci) % p)
                        })
                        .collect()
                })
                .collect();
            parts.push(Subspace::new(vectors, p));
        }
        if total != d {
            return Err(CharacterError::Verification(format!(
                "class matrix not diagonalizable over F_{p}"
            )));
        }
        Ok(parts)
    }
}

/// Irreducible characters of `group`, unordered.
pub(crate) fn irreducible_characters(
    group: &Arc<FinGroup>,
) -> Result<Vec<ClassFunction>, CharacterError> {
    let classes = group.conjugacy_classes();
    let k = classes.len();
    let order = group.order();
    let e = group.exponent();
    let p = choose_prime(e, order);
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let sizes = classes.sizes();

    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut done: Vec<Subspace> = Vec::new();
    let mut pending = vec![Subspace::new(identity, p)];
    for j in 1..k {
        if pending.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = class_matrix(group, j, p);
        let mut next = Vec::new();
        for space in pending {
            if space.dim() == 1 {
                done.push(space);
            } else {
                next.extend(space.split(&m, p)?);
            }
        }
        pending = next;
    }
    done.extend(pending);
    if done.len() != k || done.iter().any(|s| s.dim() != 1) {
        return Err(CharacterError::Verification(
            "class matrices failed to separate the irreducible characters".into(),
        ));
    }

    let inverse_class: Vec<usize> = classes
        .representatives()
        .iter()
        .map(|g| group.class_index(&g.inverse()).expect("closed"))
        .collect();
    let powers = power_classes(group);
    let sqrt_bound = (order as f64).sqrt().floor() as u64 + 1;

    let mut characters = Vec::with_capacity(k);
    for space in done {
        let v = &space.basis[0];
        if v[0] == 0 {
            return Err(CharacterError::Verification("central character vanishes at 1".into()));
        }
        let scale = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
        // Σ_r ω_r ω_{r*} / h_r = |G| / χ(1)²
        let s = (0..k).fold(0, |acc, r| {
            (acc + omega[r] * omega[inverse_class[r]] % p * inv_mod(sizes[r] % p, p)) % p
        });
        let target = order % p * inv_mod(s, p) % p;
        let degree = (1..=sqrt_bound)
            .find(|&d| d * d % p == target && order % d == 0)
            .ok_or_else(|| CharacterError::Verification("no admissible degree".into()))?;
        let modp_values: Vec<u64> = (0..k)
            .map(|r| omega[r] * (degree % p) % p * inv_mod(sizes[r] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(k);
        for r in 0..k {
            let o = powers[r].len() as u64;
            let zo = pow_mod(z, e / o, p);
            let inv_o = inv_mod(o % p, p);
            let mut terms = Vec::new();
            for kk in 0..o {
                let zinv = inv_mod(pow_mod(zo, kk, p), p);
                let mut acc = 0;
                for l in 0..o {
                    acc = (acc + modp_values[powers[r][l as usize]] * pow_mod(zinv, l, p)) % p;
                }
                let mult = acc * inv_o % p;
                if mult > degree {
                    return Err(CharacterError::Verification(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                if mult != 0 {
                    terms.push((kk as i64, BigRational::from_integer(mult.into())));
                }
            }
            values.push(Cyclotomic::from_exponents(o as u32, terms));
        }
        characters.push(ClassFunction::new(group.clone(), values)?);
    }
    Ok(characters)
}
