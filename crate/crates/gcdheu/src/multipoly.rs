//! Sparse recursive multivariate polynomials.
//!
//! A polynomial is stored as a polynomial in its *main* variable (the last
//! entry of the variable list) whose coefficients are polynomials in the
//! remaining variables, bottoming out at ring scalars. The representation
//! is canonical: no zero terms, exponents strictly decreasing, no trivial
//! degree-0 wrappers, and trailing unused variables trimmed away. Canonical
//! form makes structural equality coincide with polynomial equality.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use std::collections::BTreeMap;

use crate::error::Error;
use crate::ring::{coeff_height, exact_div_nz, gint_gcd, GaussInt, RingTag};

/// One level of the recursive sparse form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Node {
    Scalar(GaussInt),
    /// Terms in the given variable, exponents strictly decreasing, no zero
    /// coefficients, and every coefficient using only lower variables.
    Poly(usize, Vec<(u32, Node)>),
}

impl Node {
    fn zero() -> Node {
        Node::Scalar(GaussInt::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, Node::Scalar(s) if s.is_zero())
    }

    /// Highest variable index used, if any.
    fn top_var(&self) -> Option<usize> {
        match self {
            Node::Scalar(_) => None,
            Node::Poly(v, _) => Some(*v),
        }
    }

    fn arity(&self) -> usize {
        self.top_var().map_or(0, |v| v + 1)
    }

    /// Canonicalizing constructor: drops zero coefficients, collapses the
    /// empty and degree-0 cases. `terms` must arrive exponent-descending.
    fn make(var: usize, terms: Vec<(u32, Node)>) -> Node {
        let mut terms: Vec<(u32, Node)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| c.top_var().map_or(true, |t| t < var)));
        if terms.is_empty() {
            return Node::zero();
        }
        if terms.len() == 1 && terms[0].0 == 0 {
            return terms.pop().unwrap().1;
        }
        Node::Poly(var, terms)
    }

    fn add(&self, other: &Node) -> Node {
        match (self, other) {
            (Node::Scalar(a), Node::Scalar(b)) => Node::Scalar(a.add(b)),
            (Node::Poly(va, ta), b) if b.top_var().map_or(true, |vb| vb < *va) => {
                let mut terms = ta.clone();
                match terms.last_mut() {
                    Some((0, c)) => *c = c.add(b),
                    _ => terms.push((0, b.clone())),
                }
                Node::make(*va, terms)
            }
            (a, Node::Poly(..)) => other.add(a),
            (Node::Poly(va, ta), Node::Poly(_, tb)) => {
                // same variable on both sides here
                let mut terms = Vec::with_capacity(ta.len() + tb.len());
                let (mut i, mut j) = (0, 0);
                while i < ta.len() && j < tb.len() {
                    match ta[i].0.cmp(&tb[j].0) {
                        std::cmp::Ordering::Greater => {
                            terms.push(ta[i].clone());
                            i += 1;
                        }
                        std::cmp::Ordering::Less => {
                            terms.push(tb[j].clone());
                            j += 1;
                        }
                        std::cmp::Ordering::Equal => {
                            terms.push((ta[i].0, ta[i].1.add(&tb[j].1)));
                            i += 1;
                            j += 1;
                        }
                    }
                }
                terms.extend_from_slice(&ta[i..]);
                terms.extend_from_slice(&tb[j..]);
                Node::make(*va, terms)
            }
        }
    }

    fn neg(&self) -> Node {
        match self {
            Node::Scalar(s) => Node::Scalar(s.neg()),
            Node::Poly(v, terms) => {
                Node::Poly(*v, terms.iter().map(|(e, c)| (*e, c.neg())).collect())
            }
        }
    }

    fn sub(&self, other: &Node) -> Node {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Node) -> Node {
        if self.is_zero() || other.is_zero() {
            return Node::zero();
        }
        match (self, other) {
            (Node::Scalar(a), Node::Scalar(b)) => Node::Scalar(a.mul(b)),
            (Node::Poly(va, ta), b) if b.top_var().map_or(true, |vb| vb < *va) => {
                let terms = ta.iter().map(|(e, c)| (*e, c.mul(b))).collect();
                Node::make(*va, terms)
            }
            (a, Node::Poly(..)) => other.mul(a),
            (Node::Poly(va, ta), Node::Poly(_, tb)) => {
                let mut acc: BTreeMap<u32, Node> = BTreeMap::new();
                for (ea, ca) in ta {
                    for (eb, cb) in tb {
                        let prod = ca.mul(cb);
                        acc.entry(ea + eb)
                            .and_modify(|c| *c = c.add(&prod))
                            .or_insert(prod);
                    }
                }
                let terms = acc.into_iter().rev().collect();
                Node::make(*va, terms)
            }
        }
    }

    fn mul_scalar(&self, s: &GaussInt) -> Node {
        self.mul(&Node::Scalar(s.clone()))
    }

    fn for_each_scalar<'a>(&'a self, f: &mut impl FnMut(&'a GaussInt)) {
        match self {
            Node::Scalar(s) => f(s),
            Node::Poly(_, terms) => terms.iter().for_each(|(_, c)| c.for_each_scalar(f)),
        }
    }

    fn map_scalars<E>(&self, f: &mut impl FnMut(&GaussInt) -> Result<GaussInt, E>) -> Result<Node, E> {
        match self {
            Node::Scalar(s) => Ok(Node::Scalar(f(s)?)),
            Node::Poly(v, terms) => {
                let mapped = terms
                    .iter()
                    .map(|(e, c)| Ok((*e, c.map_scalars(f)?)))
                    .collect::<Result<Vec<_>, E>>()?;
                Ok(Node::make(*v, mapped))
            }
        }
    }

    /// Exact division by a nonzero scalar; `None` when any coefficient
    /// fails to divide.
    fn div_scalar(&self, s: &GaussInt) -> Option<Node> {
        self.map_scalars(&mut |c| exact_div_nz(c, s).ok_or(())).ok()
    }

    fn degree_in(&self, var: usize) -> u32 {
        match self {
            Node::Scalar(_) => 0,
            Node::Poly(v, terms) => {
                if *v == var {
                    terms[0].0
                } else if *v < var {
                    0
                } else {
                    terms.iter().map(|(_, c)| c.degree_in(var)).max().unwrap_or(0)
                }
            }
        }
    }

    /// The scalar of the lexicographically leading term (first term at
    /// every level).
    fn leading_scalar(&self) -> &GaussInt {
        match self {
            Node::Scalar(s) => s,
            Node::Poly(_, terms) => terms[0].1.leading_scalar(),
        }
    }

    /// View of the node as coefficients of `var` (exponent-descending).
    /// A node not using `var` is a single degree-0 coefficient.
    fn coeffs_in(&self, var: usize) -> Vec<(u32, Node)> {
        match self {
            Node::Poly(v, terms) if *v == var => terms.clone(),
            other => vec![(0, other.clone())],
        }
    }

    /// Horner evaluation of the top variable, which must be `var`.
    fn eval_top(&self, var: usize, z: &BigInt) -> Node {
        let terms = self.coeffs_in(var);
        let zs = GaussInt::from_int(z.clone());
        let mut acc = terms[0].1.clone();
        let mut exp = terms[0].0;
        for (e, c) in &terms[1..] {
            let step = GaussInt::from_int(Pow::pow(z, exp - e));
            acc = acc.mul_scalar(&step).add(c);
            exp = *e;
        }
        if exp > 0 {
            acc = acc.mul_scalar(&GaussInt::from_int(Pow::pow(z, exp)));
        }
        let _ = zs;
        acc
    }

    fn collect_terms(&self, cur: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, GaussInt)>) {
        match self {
            Node::Scalar(s) => {
                if !s.is_zero() {
                    out.push((cur.clone(), s.clone()));
                }
            }
            Node::Poly(v, terms) => {
                for (e, c) in terms {
                    cur[*v] = *e;
                    c.collect_terms(cur, out);
                    cur[*v] = 0;
                }
            }
        }
    }

    /// Build a canonical node from distributed (monomial, scalar) pairs.
    /// Duplicate monomials are summed.
    fn from_distributed(terms: Vec<(Vec<u32>, GaussInt)>, nvars: usize) -> Node {
        if terms.is_empty() {
            return Node::zero();
        }
        if nvars == 0 {
            let mut sum = GaussInt::zero();
            for (_, s) in terms {
                sum = sum.add(&s);
            }
            return Node::Scalar(sum);
        }
        let var = nvars - 1;
        let mut groups: BTreeMap<u32, Vec<(Vec<u32>, GaussInt)>> = BTreeMap::new();
        for (mono, s) in terms {
            groups.entry(mono[var]).or_default().push((mono, s));
        }
        let built = groups
            .into_iter()
            .rev()
            .map(|(e, group)| (e, Node::from_distributed(group, var)))
            .collect();
        Node::make(var, built)
    }
}

/// Sparse recursive multivariate polynomial over ℤ or ℤ[i].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub(crate) ring: RingTag,
    pub(crate) vars: Vec<String>,
    pub(crate) body: Node,
}

impl MultiPoly {
    /// Canonical wrapper: trims variables the body does not reach.
    pub(crate) fn new(ring: RingTag, mut vars: Vec<String>, body: Node) -> MultiPoly {
        vars.truncate(body.arity());
        MultiPoly { ring, vars, body }
    }

    pub fn zero(ring: RingTag) -> MultiPoly {
        MultiPoly { ring, vars: Vec::new(), body: Node::zero() }
    }

    pub fn constant(ring: RingTag, value: GaussInt) -> MultiPoly {
        MultiPoly { ring, vars: Vec::new(), body: Node::Scalar(value) }
    }

    pub fn one(ring: RingTag) -> MultiPoly {
        MultiPoly::constant(ring, GaussInt::one())
    }

    /// The polynomial `name` within the variable list `vars`.
    pub fn var(ring: RingTag, vars: Vec<String>, name: &str) -> Result<MultiPoly, Error> {
        let idx = vars.iter().position(|v| v == name).ok_or(Error::VariableMismatch)?;
        let body = Node::Poly(idx, vec![(1, Node::Scalar(GaussInt::one()))]);
        Ok(MultiPoly::new(ring, vars, body))
    }

    /// Build from distributed terms: each entry is (exponent vector aligned
    /// with `vars`, scalar). Duplicates are summed, zeros dropped.
    pub fn from_terms(
        ring: RingTag,
        vars: Vec<String>,
        terms: Vec<(Vec<u32>, GaussInt)>,
    ) -> Result<MultiPoly, Error> {
        for i in 0..vars.len() {
            if vars[i + 1..].contains(&vars[i]) {
                return Err(Error::VariableMismatch);
            }
        }
        if terms.iter().any(|(m, _)| m.len() != vars.len()) {
            return Err(Error::VariableMismatch);
        }
        let nvars = vars.len();
        Ok(MultiPoly::new(ring, vars, Node::from_distributed(terms, nvars)))
    }

    /// Distributed view: (exponent vector aligned with `vars`, scalar),
    /// main variable most significant, descending.
    pub fn terms(&self) -> Vec<(Vec<u32>, GaussInt)> {
        let mut cur = vec![0u32; self.vars.len()];
        let mut out = Vec::new();
        self.body.collect_terms(&mut cur, &mut out);
        out
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.body, Node::Scalar(s) if s.is_one())
    }

    /// True for constants that are ring units.
    pub fn is_unit(&self) -> bool {
        matches!(&self.body, Node::Scalar(s) if s.is_unit())
    }

    pub fn constant_value(&self) -> Option<&GaussInt> {
        match &self.body {
            Node::Scalar(s) => Some(s),
            _ => None,
        }
    }

    /// Degree in the main (last) variable; 0 for constants.
    pub fn main_degree(&self) -> u32 {
        match self.vars.len() {
            0 => 0,
            k => self.body.degree_in(k - 1),
        }
    }

    pub fn degree_of(&self, name: &str) -> Option<u32> {
        let idx = self.vars.iter().position(|v| v == name)?;
        Some(self.body.degree_in(idx))
    }

    /// Scalar of the lexicographically leading term.
    pub fn leading_scalar(&self) -> GaussInt {
        self.body.leading_scalar().clone()
    }

    /// Number of scalar coefficients (monomials).
    pub fn term_count(&self) -> usize {
        let mut n = 0;
        self.body.for_each_scalar(&mut |_| n += 1);
        if self.is_zero() {
            0
        } else {
            n
        }
    }

    /// The shared variable order of two compatible operands: one list must
    /// be a prefix of the other.
    fn unified_vars(&self, other: &MultiPoly) -> Result<Vec<String>, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let (short, long) = if self.vars.len() <= other.vars.len() {
            (&self.vars, &other.vars)
        } else {
            (&other.vars, &self.vars)
        };
        if long[..short.len()] != short[..] {
            return Err(Error::VariableMismatch);
        }
        Ok(long.clone())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        let vars = self.unified_vars(other)?;
        Ok(MultiPoly::new(self.ring, vars, self.body.add(&other.body)))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        let vars = self.unified_vars(other)?;
        Ok(MultiPoly::new(self.ring, vars, self.body.sub(&other.body)))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        let vars = self.unified_vars(other)?;
        Ok(MultiPoly::new(self.ring, vars, self.body.mul(&other.body)))
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { ring: self.ring, vars: self.vars.clone(), body: self.body.neg() }
    }

    /// Multiply every coefficient by a ring scalar.
    pub fn scale(&self, s: &GaussInt) -> MultiPoly {
        MultiPoly::new(self.ring, self.vars.clone(), self.body.mul_scalar(s))
    }

    /// Substitute `z` for the main variable (Horner). The result lives in
    /// one fewer variable.
    pub fn eval_main(&self, z: &BigInt) -> Result<MultiPoly, Error> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let main = self.vars.len() - 1;
        let body = self.body.eval_top(main, z);
        Ok(MultiPoly::new(self.ring, self.vars[..main].to_vec(), body))
    }

    /// Largest coefficient height anywhere in the polynomial; 0 for the
    /// zero polynomial.
    pub fn height(&self) -> BigInt {
        let mut best = BigInt::zero();
        self.body.for_each_scalar(&mut |s| {
            let h = coeff_height(s);
            if h > best {
                best = h;
            }
        });
        best
    }

    /// Ring gcd of all scalar coefficients, unit-normalized; 0 for zero.
    pub fn icontent(&self) -> GaussInt {
        let mut acc = GaussInt::zero();
        let mut scalars = Vec::new();
        self.body.for_each_scalar(&mut |s| scalars.push(s));
        for s in scalars {
            acc = gint_gcd(&acc, s);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// The polynomial divided by its integer content; zero stays zero.
    pub fn primitive_part(&self) -> MultiPoly {
        let c = self.icontent();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        let body = self.body.div_scalar(&c).expect("integer content divides every coefficient");
        MultiPoly::new(self.ring, self.vars.clone(), body)
    }

    /// Gcd of the coefficients of `self` viewed as a polynomial in its main
    /// variable, computed by the supplied gcd. For constants and univariate
    /// inputs this is the integer content.
    pub fn content_main<F>(&self, mut gcd_fn: F) -> Result<MultiPoly, Error>
    where
        F: FnMut(&MultiPoly, &MultiPoly) -> Result<MultiPoly, Error>,
    {
        if self.vars.len() < 2 {
            return Ok(MultiPoly::constant(self.ring, self.icontent()));
        }
        let main = self.vars.len() - 1;
        let lower = self.vars[..main].to_vec();
        let mut acc: Option<MultiPoly> = None;
        for (_, c) in self.body.coeffs_in(main) {
            let coeff = MultiPoly::new(self.ring, lower.clone(), c);
            acc = Some(match acc {
                None => coeff,
                Some(a) => gcd_fn(&a, &coeff)?,
            });
            if acc.as_ref().is_some_and(|a| a.is_unit()) {
                break;
            }
        }
        let content = acc.expect("nonzero polynomial has coefficients");
        Ok(content.normalize_unit())
    }

    /// Exact polynomial division: `Some(q)` with `self = q * den`, `None`
    /// when the division leaves a remainder anywhere.
    pub fn try_divide_exact(&self, den: &MultiPoly) -> Result<Option<MultiPoly>, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = self.unified_vars(den)?;
        Ok(node_div_exact(&self.body, &den.body).map(|q| MultiPoly::new(self.ring, vars, q)))
    }

    /// Multiply by the ring unit that unit-normalizes the leading scalar.
    pub fn normalize_unit(&self) -> MultiPoly {
        let u = self.body.leading_scalar().unit_factor();
        if u.is_one() {
            self.clone()
        } else {
            self.scale(&u)
        }
    }

    /// Rebuild the polynomial under a new variable order, which must
    /// contain every variable in use.
    pub fn reorder_vars(&self, new_order: &[String]) -> Result<MultiPoly, Error> {
        let mapping = self
            .vars
            .iter()
            .map(|v| new_order.iter().position(|n| n == v).ok_or(Error::VariableMismatch))
            .collect::<Result<Vec<_>, _>>()?;
        let remapped = self
            .terms()
            .into_iter()
            .map(|(mono, s)| {
                let mut new_mono = vec![0u32; new_order.len()];
                for (old, e) in mono.into_iter().enumerate() {
                    new_mono[mapping[old]] = e;
                }
                (new_mono, s)
            })
            .collect();
        MultiPoly::from_terms(self.ring, new_order.to_vec(), remapped)
    }

    /// Coefficients of the main variable as polynomials in the remaining
    /// variables, exponent-descending.
    pub(crate) fn main_coefficients(&self) -> Vec<(u32, MultiPoly)> {
        if self.vars.is_empty() {
            return vec![(0, self.clone())];
        }
        let main = self.vars.len() - 1;
        let lower = self.vars[..main].to_vec();
        self.body
            .coeffs_in(main)
            .into_iter()
            .map(|(e, c)| (e, MultiPoly::new(self.ring, lower.clone(), c)))
            .collect()
    }

    /// Assemble a polynomial from main-variable coefficients (descending
    /// exponents), the inverse of `main_coefficients`.
    pub(crate) fn from_main_coefficients(
        ring: RingTag,
        vars: Vec<String>,
        coeffs: Vec<(u32, MultiPoly)>,
    ) -> MultiPoly {
        let main = vars.len() - 1;
        let terms = coeffs.into_iter().map(|(e, p)| (e, p.body)).collect();
        MultiPoly::new(ring, vars, Node::make(main, terms))
    }

    /// Componentwise symmetric remainder, then exact quotient by `z`:
    /// returns (digit, rest) with `self = digit + z * rest`.
    pub(crate) fn peel_digit(&self, z: &BigInt) -> Result<(MultiPoly, MultiPoly), Error> {
        let digit_body = self.body.map_scalars(&mut |s| crate::ring::gsmod(s, z))?;
        let digit = MultiPoly::new(self.ring, self.vars.clone(), digit_body);
        let rest_body = self
            .body
            .sub(&digit.body)
            .div_scalar(&GaussInt::from_int(z.clone()))
            .expect("peeled difference is divisible by the base");
        let rest = MultiPoly::new(self.ring, self.vars.clone(), rest_body);
        Ok((digit, rest))
    }
}

/// Recursive exact division on raw nodes.
fn node_div_exact(num: &Node, den: &Node) -> Option<Node> {
    if num.is_zero() {
        return Some(Node::zero());
    }
    match den {
        Node::Scalar(s) => num.div_scalar(s),
        Node::Poly(dv, dterms) => {
            match num.top_var() {
                None => None,
                Some(nv) if nv < *dv => None,
                Some(nv) if nv > *dv => {
                    // divisor is free of the numerator's top variable:
                    // divide coefficientwise
                    let Node::Poly(_, nterms) = num else { unreachable!() };
                    let quots = nterms
                        .iter()
                        .map(|(e, c)| Some((*e, node_div_exact(c, den)?)))
                        .collect::<Option<Vec<_>>>()?;
                    Some(Node::make(nv, quots))
                }
                Some(_) => {
                    let dd = dterms[0].0;
                    let dlead = &dterms[0].1;
                    let mut rem = num.clone();
                    let mut quot: Vec<(u32, Node)> = Vec::new();
                    while !rem.is_zero() {
                        let (rd, rlead) = match &rem {
                            Node::Poly(v, terms) if v == dv => (terms[0].0, terms[0].1.clone()),
                            other => (0, other.clone()),
                        };
                        if rd < dd {
                            return None;
                        }
                        let t = node_div_exact(&rlead, dlead)?;
                        let shifted = Node::make(*dv, vec![(rd - dd, t.clone())]);
                        rem = rem.sub(&shifted.mul(den));
                        quot.push((rd - dd, t));
                    }
                    Some(Node::make(*dv, quot))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::from_i64(re, im)
    }

    /// `c * x^a * y^b` over the integers with vars [x, y].
    fn xy(c: i64, a: u32, b: u32) -> MultiPoly {
        MultiPoly::from_terms(
            RingTag::Integers,
            vec!["x".into(), "y".into()],
            vec![(vec![a, b], g(c, 0))],
        )
        .unwrap()
    }

    /// Univariate integer polynomial from coefficients a0..an.
    fn upoly(coeffs: &[i64]) -> MultiPoly {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(e, &c)| (vec![e as u32], g(c, 0)))
            .collect();
        MultiPoly::from_terms(RingTag::Integers, vec!["x".into()], terms).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let xp1 = upoly(&[1, 1]);
        let xm1 = upoly(&[-1, 1]);
        assert_eq!(xp1.mul(&xm1).unwrap(), upoly(&[-1, 0, 1]));
    }

    #[test]
    fn cancellation_collapses_to_constant() {
        let a = xy(1, 1, 1).add(&xy(2, 0, 0)).unwrap();
        let b = xy(-1, 1, 1);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, MultiPoly::constant(RingTag::Integers, g(2, 0)));
        assert!(sum.vars().is_empty());
    }

    #[test]
    fn zero_annihilates() {
        let p = xy(3, 2, 1).add(&xy(-1, 0, 1)).unwrap();
        let z = MultiPoly::zero(RingTag::Integers);
        assert!(z.mul(&p).unwrap().is_zero());
    }

    #[test]
    fn mixed_ring_rejected() {
        let a = upoly(&[1, 1]);
        let b = MultiPoly::constant(RingTag::GaussianIntegers, g(1, 0));
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn incompatible_orders_rejected() {
        let a = MultiPoly::var(RingTag::Integers, vec!["x".into()], "x").unwrap();
        let b = MultiPoly::var(RingTag::Integers, vec!["y".into()], "y").unwrap();
        assert_eq!(a.add(&b), Err(Error::VariableMismatch));
    }

    #[test]
    fn eval_main_substitutes_last_variable() {
        // x*y + 2 at y=5 -> 5x + 2
        let p = xy(1, 1, 1).add(&xy(2, 0, 0)).unwrap();
        let e = p.eval_main(&int(5)).unwrap();
        assert_eq!(e, upoly(&[2, 5]));

        assert_eq!(
            upoly(&[-1, 0, 1]).eval_main(&int(3)).unwrap(),
            MultiPoly::constant(RingTag::Integers, g(8, 0))
        );

        // evaluation at zero picks the trailing coefficient
        let p = upoly(&[7, 3, 4]);
        assert_eq!(
            p.eval_main(&int(0)).unwrap(),
            MultiPoly::constant(RingTag::Integers, g(7, 0))
        );

        let c = MultiPoly::constant(RingTag::Integers, g(1, 0));
        assert_eq!(c.eval_main(&int(2)), Err(Error::ConstantInput));
    }

    #[test]
    fn eval_is_ring_homomorphism_spot() {
        let a = xy(2, 2, 1).add(&xy(-3, 0, 2)).unwrap().add(&xy(1, 1, 0)).unwrap();
        let b = xy(5, 1, 2).add(&xy(4, 2, 0)).unwrap();
        for z in [-3i64, 0, 2, 11] {
            let z = int(z);
            let lhs = a.mul(&b).unwrap().eval_main(&z).unwrap();
            let rhs = a.eval_main(&z).unwrap().mul(&b.eval_main(&z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            let lhs = a.add(&b).unwrap().eval_main(&z).unwrap();
            let rhs = a.eval_main(&z).unwrap().add(&b.eval_main(&z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn height_examples() {
        assert_eq!(upoly(&[2, -7, 3]).height(), int(7));
        assert_eq!(MultiPoly::zero(RingTag::Integers).height(), int(0));
        let p = MultiPoly::from_terms(
            RingTag::GaussianIntegers,
            vec!["x".into(), "y".into()],
            vec![(vec![1, 1], g(3, 4)), (vec![0, 0], g(-2, 0))],
        )
        .unwrap();
        assert_eq!(p.height(), int(5));
    }

    #[test]
    fn content_and_primitive_part() {
        let p = upoly(&[9, 6]);
        assert_eq!(p.icontent(), g(3, 0));
        assert_eq!(p.primitive_part(), upoly(&[3, 2]));
        assert_eq!(upoly(&[1, 1]).icontent(), g(1, 0));
        assert_eq!(MultiPoly::zero(RingTag::Integers).icontent(), g(0, 0));
        assert!(MultiPoly::zero(RingTag::Integers).primitive_part().is_zero());
    }

    #[test]
    fn gaussian_content_frozen_from_divisor_enumeration() {
        // (2+2i)x - 4: gcd(2+2i, -4) = 2+2i up to units, since
        // -4 / (2+2i) = -1+i. Value frozen from the brute-force
        // divisor oracle in the ring tests.
        let p = MultiPoly::from_terms(
            RingTag::GaussianIntegers,
            vec!["x".into()],
            vec![(vec![1], g(2, 2)), (vec![0], g(-4, 0))],
        )
        .unwrap();
        assert_eq!(p.icontent(), g(2, 2));
        let pp = p.primitive_part();
        // x - 1 + i
        let expected = MultiPoly::from_terms(
            RingTag::GaussianIntegers,
            vec!["x".into()],
            vec![(vec![1], g(1, 0)), (vec![0], g(-1, 1))],
        )
        .unwrap();
        assert_eq!(pp, expected);
        assert_eq!(pp.scale(&p.icontent()), p);
    }

    /// gcd by mutual divisibility, enough for the simple content cases.
    fn divisor_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, Error> {
        if b.try_divide_exact(a)?.is_some() {
            return Ok(a.normalize_unit());
        }
        if a.try_divide_exact(b)?.is_some() {
            return Ok(b.normalize_unit());
        }
        panic!("divisor_gcd only supports nested divisor chains");
    }

    #[test]
    fn content_in_main_variable() {
        // vars [y, x] so x is the main variable
        let yx = |c: i64, ye: u32, xe: u32| {
            MultiPoly::from_terms(
                RingTag::Integers,
                vec!["y".into(), "x".into()],
                vec![(vec![ye, xe], g(c, 0))],
            )
            .unwrap()
        };
        // y*x^2 + y^2*x -> content y
        let p = yx(1, 1, 2).add(&yx(1, 2, 1)).unwrap();
        let c = p.content_main(divisor_gcd).unwrap();
        assert_eq!(c, MultiPoly::var(RingTag::Integers, vec!["y".into()], "y").unwrap());

        // x^2 + 1 -> coprime coefficients
        let q = upoly(&[1, 0, 1]);
        assert!(q.content_main(divisor_gcd).unwrap().is_one());

        // 2y*x + 4y -> 2y
        let r = yx(2, 1, 1).add(&yx(4, 1, 0)).unwrap();
        let c = r.content_main(divisor_gcd).unwrap();
        assert_eq!(c, yx(2, 1, 0).reorder_vars(&["y".into()]).unwrap());
    }

    #[test]
    fn exact_division_cases() {
        let by = |n: &MultiPoly, d: &MultiPoly| n.try_divide_exact(d).unwrap();
        assert_eq!(by(&upoly(&[-1, 0, 1]), &upoly(&[1, 1])), Some(upoly(&[-1, 1])));
        assert_eq!(by(&upoly(&[1, 0, 1]), &upoly(&[1, 1])), None);

        // (x*y + y) / y = x + 1
        let num = xy(1, 1, 1).add(&xy(1, 0, 1)).unwrap();
        let den = xy(1, 0, 1);
        let q = by(&num, &den).unwrap();
        assert_eq!(q, upoly(&[1, 1]));

        assert_eq!(
            upoly(&[1]).try_divide_exact(&MultiPoly::zero(RingTag::Integers)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn division_roundtrip_and_planted_failure() {
        let a = xy(3, 2, 0).add(&xy(-1, 1, 1)).unwrap().add(&xy(5, 0, 0)).unwrap();
        let b = xy(2, 1, 2).add(&xy(7, 0, 0)).unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.try_divide_exact(&b).unwrap(), Some(a.clone()));
        // adding a low-degree remainder breaks exactness
        let spoiled = prod.add(&xy(1, 0, 1)).unwrap();
        assert_eq!(spoiled.try_divide_exact(&b).unwrap(), None);
    }

    #[test]
    fn unit_normalization() {
        assert_eq!(upoly(&[4, -2]).normalize_unit(), upoly(&[-4, 2]));
        let ix = MultiPoly::from_terms(
            RingTag::GaussianIntegers,
            vec!["x".into()],
            vec![(vec![1], g(0, 1))],
        )
        .unwrap();
        let x = MultiPoly::from_terms(
            RingTag::GaussianIntegers,
            vec!["x".into()],
            vec![(vec![1], g(1, 0))],
        )
        .unwrap();
        assert_eq!(ix.normalize_unit(), x);
        assert!(MultiPoly::zero(RingTag::Integers).normalize_unit().is_zero());
    }

    #[test]
    fn reorder_swaps_main_variable() {
        let p = xy(1, 2, 1).add(&xy(3, 0, 2)).unwrap();
        let q = p.reorder_vars(&["y".into(), "x".into()]).unwrap();
        assert_eq!(q.vars(), ["y".to_string(), "x".to_string()]);
        assert_eq!(q.reorder_vars(&["x".into(), "y".into()]).unwrap(), p);
        assert_eq!(p.degree_of("x"), q.degree_of("x"));
    }

    #[test]
    fn height_growth_under_evaluation() {
        let p = xy(9, 2, 2).add(&xy(-7, 1, 1)).unwrap().add(&xy(4, 0, 0)).unwrap();
        for z in [3i64, 10, 1000] {
            let z = int(z);
            let evaluated = p.eval_main(&z).unwrap();
            let bound = p.height() * (&z + 1u32).pow(p.main_degree());
            assert!(evaluated.height() <= bound);
        }
    }

    #[test]
    fn prefix_compatible_arities() {
        let p = xy(1, 1, 1); // x*y in [x, y]
        let q = upoly(&[1, 1]); // x + 1 in [x]
        let sum = p.add(&q).unwrap();
        assert_eq!(sum.vars().len(), 2);
        assert_eq!(sum.sub(&p).unwrap(), q);
    }
}
