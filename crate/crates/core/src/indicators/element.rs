//! Group-algebra elements aggregated over the orbits of an acting group.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::{power, IndicatorError};
use crate::cyclotomic::{format_rational, parse_rational};
use crate::group::FinGroup;
use crate::perm::Permutation;

/// How the acting group moves elements, and hence which orbits key the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Keying {
    /// `s · x = s x s⁻¹`.
    Conjugation,
    /// `s · h = (d⁻¹⊳s) h s⁻¹`, the transport of conjugation on `dH` to `H`.
    Twisted { d: Permutation },
}

impl Keying {
    fn act(&self, s: &Permutation, x: &Permutation) -> Permutation {
        match self {
            Keying::Conjugation => s.conjugate_unchecked(x),
            Keying::Twisted { d } => {
                let twisted = d.inverse().conjugate_unchecked(s);
                &(&twisted * x) * &s.inverse()
            }
        }
    }
}

/// `Σ c_O · O` over orbits `O` of the acting group; each orbit is keyed by
/// its least element and `c_O` is the total coefficient of the orbit.
#[derive(Clone)]
pub struct CentralElement {
    acting: Arc<FinGroup>,
    keying: Keying,
    support: BTreeMap<Permutation, BigRational>,
}

impl CentralElement {
    /// Aggregates `(element, coefficient)` pairs over orbits; zero totals are dropped.
    pub fn from_terms<I>(acting: Arc<FinGroup>, keying: Keying, terms: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, BigRational)>,
    {
        let mut support: BTreeMap<Permutation, BigRational> = BTreeMap::new();
        for (x, c) in terms {
            let key = canonical(&acting, &keying, &x);
            *support.entry(key).or_insert_with(BigRational::zero) += c;
        }
        support.retain(|_, c| !c.is_zero());
        CentralElement {
            acting,
            keying,
            support,
        }
    }

    pub fn zero(acting: Arc<FinGroup>, keying: Keying) -> Self {
        CentralElement {
            acting,
            keying,
            support: BTreeMap::new(),
        }
    }

    pub fn acting(&self) -> &Arc<FinGroup> {
        &self.acting
    }

    pub fn keying(&self) -> &Keying {
        &self.keying
    }

    /// `(orbit key, orbit total)` in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Total coefficient of the orbit containing `x`.
    pub fn coefficient(&self, x: &Permutation) -> BigRational {
        let key = canonical(&self.acting, &self.keying, x);
        self.support.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Sum of all coefficients (the image under the augmentation map).
    pub fn augmentation(&self) -> BigRational {
        self.support.values().fold(BigRational::zero(), |a, c| a + c)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.support.values_mut() {
            *c *= q;
        }
        out.support.retain(|_, c| !c.is_zero());
        out
    }

    /// The orbit of `x`, sorted.
    pub fn orbit(&self, x: &Permutation) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self
            .acting
            .elements()
            .iter()
            .map(|s| self.keying.act(s, x))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Element-level form: each orbit member carries an equal share of the
    /// orbit total. Sorted by element.
    pub fn expand(&self) -> Vec<(Permutation, BigRational)> {
        let mut out = Vec::new();
        for (key, c) in &self.support {
            let orbit = self.orbit(key);
            let share = c / BigRational::from_integer(orbit.len().into());
            out.extend(orbit.into_iter().map(|x| (x, share.clone())));
        }
        out.sort();
        out
    }

    /// The linear map induced by `x ↦ x^m`; requires conjugation keying.
    pub fn power_map(&self, m: u64) -> Result<Self, IndicatorError> {
        if self.keying != Keying::Conjugation {
            return Err(IndicatorError::Internal(
                "power map is only defined for conjugation orbits".into(),
            ));
        }
        Ok(CentralElement::from_terms(
            self.acting.clone(),
            Keying::Conjugation,
            self.support.iter().map(|(x, c)| (power(x, m), c.clone())),
        ))
    }

    /// Keeps only the orbits lying in `s`.
    pub fn project_to(&self, s: &FinGroup) -> Self {
        let mut out = self.clone();
        out.support.retain(|x, _| s.contains(x));
        out
    }

    /// Coefficient totals per conjugacy class of `s`, for comparing elements
    /// keyed by different acting groups.
    pub fn class_totals(&self, s: &FinGroup) -> Result<Vec<BigRational>, IndicatorError> {
        let classes = s.conjugacy_classes();
        let mut totals = vec![BigRational::zero(); classes.len()];
        for (x, c) in &self.support {
            let k = s
                .class_index(x)
                .ok_or_else(|| IndicatorError::NotInStabilizer(x.to_string()))?;
            totals[k] += c;
        }
        Ok(totals)
    }
}

fn canonical(acting: &FinGroup, keying: &Keying, x: &Permutation) -> Permutation {
    if let Keying::Conjugation = keying {
        if let Some(c) = acting.class_index(x) {
            return acting.conjugacy_classes().representative(c).clone();
        }
    }
    acting
        .elements()
        .iter()
        .map(|s| keying.act(s, x))
        .min()
        .expect("acting group is nonempty")
}

impl PartialEq for CentralElement {
    fn eq(&self, other: &Self) -> bool {
        self.keying == other.keying
            && self.acting.same_elements(&other.acting)
            && self.support == other.support
    }
}

/// `() + 3(1 2) - 1/2(1 2 3)`; coefficients of 1 are omitted, zero is `0`.
impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        for (i, (x, c)) in self.support.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                f.write_str(&format_rational(&magnitude))?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `5/12() + 1/3(1 2 3) - (1 2)(3 4)` into `(element, coefficient)`
/// terms. A bare rational denotes a multiple of the identity.
pub fn parse_expansion(
    text: &str,
    degree: usize,
) -> Result<Vec<(Permutation, BigRational)>, IndicatorError> {
    let err = |reason: String| IndicatorError::Expansion {
        text: text.to_string(),
        reason,
    };
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(err("unbalanced ')'".into()));
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if !current.trim().is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
            } else if ch == '-' && !pieces.is_empty() && current.trim().is_empty() {
                // "a - b": sign belongs to the next term
            }
            current.clear();
            negative = ch == '-';
            continue;
        }
        current.push(ch);
    }
    if depth != 0 {
        return Err(err("unbalanced '('".into()));
    }
    if !current.trim().is_empty() {
        pieces.push((negative, current));
    }
    let mut terms = Vec::new();
    for (neg, piece) in pieces {
        let piece = piece.trim();
        if piece == "0" {
            continue;
        }
        let (coeff, cycles) = match piece.find('(') {
            Some(i) => (piece[..i].trim(), &piece[i..]),
            None => (piece, "()"),
        };
        let mut c = if coeff.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coeff).ok_or_else(|| err(format!("bad coefficient {coeff:?}")))?
        };
        if neg {
            c = -c;
        }
        let x = Permutation::parse_cycles(cycles, degree)
            .map_err(|e| err(format!("bad permutation {cycles:?}: {e}")))?;
        terms.push((x, c));
    }
    Ok(terms)
}
