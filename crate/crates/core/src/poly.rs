//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Each polynomial carries its own sorted variable list and dense exponent
//! vectors over it. Binary operations merge the variable lists by name.
//! Unused variables are dropped on normalization so that equality is
//! structural.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Scalar::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as (variable-name -> exponent) maps with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<(&str, u32)>, &Scalar)> + '_ {
        self.terms.iter().map(move |(exps, c)| {
            let mono = self
                .vars
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v.as_str(), e))
                .collect();
            (mono, c)
        })
    }

    /// Coefficient of the monomial given as (variable, exponent) pairs.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> Scalar {
        let mut exps = vec![0u32; self.vars.len()];
        for &(name, e) in monomial {
            match self.vars.binary_search_by(|v| v.as_str().cmp(name)) {
                Ok(i) => exps[i] += e,
                Err(_) if e == 0 => {}
                Err(_) => return Scalar::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn from_parts(vars: Vec<String>, terms: BTreeMap<Exponents, Scalar>) -> Self {
        MultiPoly { vars, terms }.normalized()
    }

    /// Removes zero coefficients and variables that no term uses.
    pub fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(e, c)| {
                let e: Exponents = e
                    .into_iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(x, _)| x)
                    .collect();
                (e, c)
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Sorted union of two variable lists, with index maps from each input.
    fn merge_vars(a: &[String], b: &[String]) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut map_a = Vec::with_capacity(a.len());
        let mut map_b = Vec::with_capacity(b.len());
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i] <= b[j]);
            let take_b = i >= a.len() || (j < b.len() && b[j] <= a[i]);
            if take_a {
                map_a.push(merged.len());
            }
            if take_b {
                map_b.push(merged.len());
            }
            merged.push(if take_a { a[i].clone() } else { b[j].clone() });
            if take_a {
                i += 1;
            }
            if take_b {
                j += 1;
            }
        }
        (merged, map_a, map_b)
    }

    fn remapped<'a>(
        &'a self,
        width: usize,
        map: &'a [usize],
    ) -> impl Iterator<Item = (Exponents, &'a Scalar)> + 'a {
        self.terms.iter().map(move |(e, c)| {
            let mut out = vec![0; width];
            for (k, &x) in e.iter().enumerate() {
                out[map[k]] = x;
            }
            (out, c)
        })
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        if self.vars == other.vars {
            let mut terms = self.terms.clone();
            for (e, c) in &other.terms {
                let slot = terms.entry(e.clone()).or_insert_with(Scalar::zero);
                if sign {
                    *slot += c;
                } else {
                    *slot -= c;
                }
            }
            return Self::from_parts(self.vars.clone(), terms);
        }
        let (vars, ma, mb) = Self::merge_vars(&self.vars, &other.vars);
        let width = vars.len();
        let mut terms: BTreeMap<Exponents, Scalar> =
            self.remapped(width, &ma).map(|(e, c)| (e, c.clone())).collect();
        for (e, c) in other.remapped(width, &mb) {
            let slot = terms.entry(e).or_insert_with(Scalar::zero);
            if sign {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        Self::from_parts(vars, terms)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (vars, ma, mb) = Self::merge_vars(&self.vars, &other.vars);
        let width = vars.len();
        let left: Vec<(Exponents, &Scalar)> = self.remapped(width, &ma).collect();
        let right: Vec<(Exponents, &Scalar)> = other.remapped(width, &mb).collect();
        let mut acc: HashMap<Exponents, Scalar> = HashMap::with_capacity(left.len() * right.len());
        for (ea, ca) in &left {
            for (eb, cb) in &right {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let term = *ca * *cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += term,
                    None => {
                        acc.insert(e, term);
                    }
                }
            }
        }
        Self::from_parts(vars, acc.into_iter().collect())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(Scalar::one());
        for _ in 0..n {
            out = out.product(self);
        }
        out
    }

    /// Evaluates in any ring, given a value for each variable.
    pub fn eval_in<R: Ring>(&self, mut value: impl FnMut(&str) -> Option<R>) -> Result<R> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            values.push(value(v).ok_or_else(|| Error::MissingAssignment(v.clone()))?);
        }
        let mut total = R::zero();
        for (exps, c) in &self.terms {
            let mut term = R::from_scalar(c);
            for (x, &e) in values.iter().zip(exps) {
                for _ in 0..e {
                    term = term.times(x);
                }
            }
            total = total.plus(&term);
        }
        Ok(total)
    }

    pub fn eval(&self, assignment: &HashMap<String, Scalar>) -> Result<Scalar> {
        self.eval_in(|v| assignment.get(v).cloned())
    }

    /// Replaces variables by polynomials; unmapped variables stay as they are.
    pub fn substitute(&self, map: &HashMap<String, MultiPoly>) -> MultiPoly {
        self.eval_in(|v| Some(map.get(v).cloned().unwrap_or_else(|| MultiPoly::var(v))))
            .expect("every variable has a value")
    }

    /// Renames variables (e.g. swapping letters); unmapped names are kept.
    pub fn rename(&self, map: &HashMap<String, String>) -> MultiPoly {
        let polys: HashMap<String, MultiPoly> = map
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::var(v)))
            .collect();
        self.substitute(&polys)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }
}

impl Ring for MultiPoly {
    fn plus(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
    fn negated(&self) -> Self {
        self.scale(&-Scalar::one())
    }
    fn scaled(&self, k: &Scalar) -> Self {
        self.scale(k)
    }
    fn from_scalar(k: &Scalar) -> Self {
        MultiPoly::constant(k.clone())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negated()
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negated()
    }
}

/// Graded lexicographic: higher total degree first, then lex on exponents.
fn grlex_desc(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex_desc(a, b));
        for (n, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", mono.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    fn bracket(p: &str, q: &str) -> MultiPoly {
        &(&v(&format!("{p}1")) * &v(&format!("{q}2"))) - &(&v(&format!("{p}2")) * &v(&format!("{q}1")))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = (v("x"), v("y"));
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn self_difference_is_structural_zero() {
        let p = &(&v("a") * &v("b")) + &MultiPoly::constant(ratio(3, 4));
        let z = &p - &p;
        assert!(z.is_zero());
        assert!(z.variables().is_empty());
        assert_eq!(z, MultiPoly::zero());
    }

    #[test]
    fn plucker_relation_expands_to_zero() {
        let gp = &(&(&bracket("a", "b") * &bracket("c", "d"))
            - &(&bracket("a", "c") * &bracket("b", "d")))
            + &(&bracket("a", "d") * &bracket("b", "c"));
        assert!(gp.is_zero(), "{gp}");
    }

    #[test]
    fn evaluation() {
        let x = v("x");
        let sq = &x * &x;
        let env: HashMap<String, Scalar> = [("x".to_string(), int(3))].into();
        assert_eq!(sq.eval(&env).unwrap(), int(9));
        assert_eq!(MultiPoly::zero().eval(&HashMap::new()).unwrap(), int(0));

        // -xy + x + z - xz at x=1, y=0, z=0
        let (x, y, z) = (v("x"), v("y"), v("z"));
        let s = &(&(&x + &z) - &(&x * &y)) - &(&x * &z);
        let env: HashMap<String, Scalar> =
            [("x".into(), int(1)), ("y".into(), int(0)), ("z".into(), int(0))].into();
        assert_eq!(s.eval(&env).unwrap(), int(1));
    }

    #[test]
    fn missing_assignment() {
        let p = &v("x") + &v("y");
        let env: HashMap<String, Scalar> = [("x".to_string(), int(1))].into();
        assert_eq!(p.eval(&env), Err(Error::MissingAssignment("y".into())));
    }

    #[test]
    fn rename_swaps_letters() {
        let p = &v("a") - &(&v("b") * &v("b"));
        let swap: HashMap<String, String> =
            [("a".to_string(), "b".to_string()), ("b".to_string(), "a".to_string())].into();
        assert_eq!(p.rename(&swap), &v("b") - &(&v("a") * &v("a")));
    }

    #[test]
    fn display_is_graded_lex() {
        let (x, y) = (v("x"), v("y"));
        let p = &(&(&x + &(&y * &y)) - &MultiPoly::constant(ratio(1, 2)))
            + &(&x * &y).scale(&int(-3));
        assert_eq!(p.to_string(), "-3*x*y + y^2 + x - 1/2");
        assert_eq!(p.coefficient(&[("x", 1), ("y", 1)]), int(-3));
        assert_eq!(p.coefficient(&[("z", 1)]), int(0));
    }

    const NAMES: [&str; 4] = ["w", "x", "y", "z"];

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(
            ((-9i64..10, 1i64..5), prop::collection::vec(0u32..3, 4)),
            0..6,
        )
        .prop_map(|terms| {
            terms.into_iter().fold(MultiPoly::zero(), |acc, ((n, d), exps)| {
                let mut m = MultiPoly::constant(ratio(n, d));
                for (name, e) in NAMES.iter().zip(exps) {
                    m = &m * &v(name).pow(e);
                }
                &acc + &m
            })
        })
    }

    fn arb_env() -> impl Strategy<Value = HashMap<String, Scalar>> {
        prop::collection::vec((-20i64..20, 1i64..7), 4).prop_map(|vals| {
            NAMES
                .iter()
                .zip(vals)
                .map(|(n, (p, q))| (n.to_string(), ratio(p, q)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), env in arb_env()) {
            let pv = p.eval(&env).unwrap();
            let qv = q.eval(&env).unwrap();
            prop_assert_eq!((&p * &q).eval(&env).unwrap(), &pv * &qv);
            prop_assert_eq!((&p + &q).eval(&env).unwrap(), &pv + &qv);
        }

        #[test]
        fn normalization_is_idempotent(p in arb_poly(), q in arb_poly()) {
            let r = &p * &q;
            prop_assert_eq!(r.clone().normalized(), r.clone());
            prop_assert_eq!(r.clone().normalized().normalized(), r);
        }

        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }
    }
}
