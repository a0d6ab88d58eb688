//! The first Weyl algebra `D = k[t]<d>` with `d t - t d = 1`.
//!
//! Elements are kept in the normal form `sum c_ab t^a d^b` (all `t` to the
//! left). `D` is graded by `weight(t) = +1`, `weight(d) = -1`, and the weight
//! `w` part of `D` is `theta_w * k[E]` where `E = t d` and `theta_w = t^w` for
//! `w >= 0`, `d^{-w}` for `w < 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// A generator of `D`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    T,
    D,
}

/// The two boundary labels `0` and `inf` of the simple graded modules.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    Zero,
    Infinity,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Boundary::Zero => write!(f, "0"),
            Boundary::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(Boundary::Zero),
            "inf" | "infinity" | "∞" => Ok(Boundary::Infinity),
            other => Err(Error::Parse(format!("`{}` is not 0 or inf", other))),
        }
    }
}

/// An element of `D` in normal form. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylElement {
    terms: BTreeMap<(u32, u32), Scalar>,
}

fn binomial(n: u32, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..k {
        acc = &(&acc * &Scalar::from_int((n - j) as i64)) * &Scalar::ratio(1, (j + 1) as i64);
    }
    acc
}

fn factorial(n: u32) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, j| &acc * &Scalar::from_int(j as i64))
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn one() -> Self {
        WeylElement::monomial(Scalar::one(), 0, 0)
    }

    pub fn constant(c: Scalar) -> Self {
        WeylElement::monomial(c, 0, 0)
    }

    /// `c t^a d^b`.
    pub fn monomial(c: Scalar, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        WeylElement { terms }
    }

    pub fn t() -> Self {
        WeylElement::monomial(Scalar::one(), 1, 0)
    }

    pub fn d() -> Self {
        WeylElement::monomial(Scalar::one(), 0, 1)
    }

    /// The Euler operator `E = t d`.
    pub fn euler() -> Self {
        WeylElement::monomial(Scalar::one(), 1, 1)
    }

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::T => WeylElement::t(),
            Letter::D => WeylElement::d(),
        }
    }

    /// `theta_w`: `t^w` for `w >= 0`, `d^{-w}` otherwise.
    pub fn theta(w: i64) -> Self {
        if w >= 0 {
            WeylElement::monomial(Scalar::one(), w as u32, 0)
        } else {
            WeylElement::monomial(Scalar::one(), 0, (-w) as u32)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Scalar)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coefficient(&self, a: u32, b: u32) -> Scalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, a: u32, b: u32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> WeylElement {
        let mut out = WeylElement::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, &(c * s));
        }
        out
    }

    /// Product in normal form, via `d^b t^c = sum_k C(b,k) C(c,k) k! t^{c-k} d^{b-k}`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                let xy = x * y;
                for k in 0..=b.min(c) {
                    let coef = &(&(&binomial(b, k) * &binomial(c, k)) * &factorial(k)) * &xy;
                    out.add_term(a + c - k, b - k + d, &coef);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> WeylElement {
        (0..n).fold(WeylElement::one(), |acc, _| acc.mul(self))
    }

    /// `a - b` if every monomial `t^a d^b` has the same `a - b`; `None` for
    /// inhomogeneous elements. The zero element has weight 0.
    pub fn weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(|&(a, b)| a as i64 - b as i64);
        let first = weights.next().unwrap_or(0);
        weights.all(|w| w == first).then_some(first)
    }

    /// Writes a homogeneous element of weight `d` as `theta_d * g(E)`.
    pub fn to_theta_form(&self) -> Result<(i64, EulerPolynomial)> {
        let d = self.weight().ok_or(Error::Inhomogeneous)?;
        let mut g = EulerPolynomial::zero();
        for (&(a, b), c) in &self.terms {
            // t^a d^b = theta_d [E]_b (d >= 0), theta_d [E+d]_a (d < 0)
            let part = if d >= 0 {
                EulerPolynomial::falling(b, &Scalar::zero())
            } else {
                EulerPolynomial::falling(a, &Scalar::from_int(d))
            };
            g = g.add(&part.scale(c));
        }
        Ok((d, g))
    }

    /// Expands `theta_d * g(E)`.
    pub fn from_theta_form(d: i64, g: &EulerPolynomial) -> WeylElement {
        let e = WeylElement::euler();
        let mut poly = WeylElement::zero();
        let mut power = WeylElement::one();
        for c in g.coefficients() {
            poly = poly.add(&power.scale(c));
            power = power.mul(&e);
        }
        WeylElement::theta(d).mul(&poly)
    }
}

/// Normal form of a linear combination of words in `t` and `d`. Each word
/// is multiplied out left to right.
pub fn normal_form(raw: &[(Scalar, Vec<Letter>)]) -> WeylElement {
    let mut out = WeylElement::zero();
    for (c, word) in raw {
        let product = word
            .iter()
            .fold(WeylElement::constant(c.clone()), |acc, &l| acc.mul(&WeylElement::letter(l)));
        out = out.add(&product);
    }
    out
}

/// `(E - alpha)^n`.
pub fn euler_power(alpha: &Scalar, n: u32) -> Result<WeylElement> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let base = WeylElement::euler().sub(&WeylElement::constant(alpha.clone()));
    Ok(base.pow(n))
}

/// The letters of the alternating word of length `n` whose rightmost letter
/// is `d` for `Boundary::Zero` and `t` for `Boundary::Infinity`.
pub fn alternating_letters(beta: Boundary, n: u32) -> Result<Vec<Letter>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let (last, other) = match beta {
        Boundary::Zero => (Letter::D, Letter::T),
        Boundary::Infinity => (Letter::T, Letter::D),
    };
    Ok((0..n)
        .map(|k| if (n - 1 - k) % 2 == 0 { last } else { other })
        .collect())
}

/// Normal form of the alternating word `w(beta, n)`.
pub fn alternating_word(beta: Boundary, n: u32) -> Result<WeylElement> {
    Ok(normal_form(&[(Scalar::one(), alternating_letters(beta, n)?)]))
}

/// `c(E)` with `theta_a * theta_b = theta_{a+b} * c(E)`.
pub fn theta_product(a: i64, b: i64) -> EulerPolynomial {
    let d = a + b;
    let linear = |shift: i64| EulerPolynomial::linear(Scalar::from_int(shift));
    match (a >= 0, b >= 0) {
        (true, true) => EulerPolynomial::one(),
        (false, false) => EulerPolynomial::one(),
        (true, false) => {
            // t^a d^m
            let m = (-b) as u32;
            if d >= 0 {
                EulerPolynomial::falling(m, &Scalar::zero())
            } else {
                EulerPolynomial::falling(a as u32, &Scalar::from_int(d))
            }
        }
        (false, true) => {
            // d^m t^b
            let m = -a;
            if d >= 0 {
                (1..=m).fold(EulerPolynomial::one(), |acc, k| acc.mul(&linear(d + k)))
            } else {
                (1..=b).fold(EulerPolynomial::one(), |acc, k| acc.mul(&linear(k)))
            }
        }
    }
}

/// A polynomial `g(E)` in the Euler operator, coefficients from low degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EulerPolynomial {
    coefficients: Vec<Scalar>,
}

impl EulerPolynomial {
    pub fn new(mut coefficients: Vec<Scalar>) -> Self {
        while coefficients.last().is_some_and(Scalar::is_zero) {
            coefficients.pop();
        }
        EulerPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        EulerPolynomial::default()
    }

    pub fn one() -> Self {
        EulerPolynomial::new(vec![Scalar::one()])
    }

    /// `E + c`.
    pub fn linear(c: Scalar) -> Self {
        EulerPolynomial::new(vec![c, Scalar::one()])
    }

    /// `(E + s)(E + s - 1)...(E + s - n + 1)`.
    pub fn falling(n: u32, s: &Scalar) -> Self {
        (0..n).fold(EulerPolynomial::one(), |acc, k| {
            acc.mul(&EulerPolynomial::linear(s - &Scalar::from_int(k as i64)))
        })
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coefficients.last()
    }

    pub fn add(&self, other: &EulerPolynomial) -> EulerPolynomial {
        let n = self.coefficients.len().max(other.coefficients.len());
        let zero = Scalar::zero();
        EulerPolynomial::new(
            (0..n)
                .map(|k| {
                    self.coefficients.get(k).unwrap_or(&zero)
                        + other.coefficients.get(k).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> EulerPolynomial {
        EulerPolynomial::new(self.coefficients.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &EulerPolynomial) -> EulerPolynomial {
        if self.is_zero() || other.is_zero() {
            return EulerPolynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        EulerPolynomial::new(out)
    }

    /// `g(E + c)`.
    pub fn shift(&self, c: &Scalar) -> EulerPolynomial {
        let lin = EulerPolynomial::linear(c.clone());
        self.coefficients
            .iter()
            .rev()
            .fold(EulerPolynomial::zero(), |acc, coef| {
                acc.mul(&lin).add(&EulerPolynomial::new(vec![coef.clone()]))
            })
    }

    pub fn monic(&self) -> EulerPolynomial {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => EulerPolynomial::zero(),
        }
    }

    /// Remainder of division by a nonzero `modulus`.
    pub fn rem(&self, modulus: &EulerPolynomial) -> EulerPolynomial {
        let m = modulus.monic();
        let Some(dm) = m.degree() else {
            panic!("division by the zero polynomial");
        };
        let mut r = self.coefficients.clone();
        while r.len() > dm {
            let top = r.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let offset = r.len() - dm;
            for (k, c) in m.coefficients[..dm].iter().enumerate() {
                r[offset + k].sub_mul(&top, c);
            }
        }
        EulerPolynomial::new(r)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coefficients
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Display for EulerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(u32, u32, Scalar)> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| (k as u32, 0, c.clone()))
            .rev()
            .collect();
        write_terms(f, &terms, |f, a, _| write_power(f, "E", a, false))
    }
}

impl fmt::Debug for EulerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, sym: &str, e: u32, need_star: bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if need_star {
        write!(f, "*")?;
    }
    if e == 1 {
        write!(f, "{}", sym)
    } else {
        write!(f, "{}^{}", sym, e)
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(u32, u32, Scalar)],
    monomial: impl Fn(&mut fmt::Formatter<'_>, u32, u32) -> fmt::Result,
) -> fmt::Result {
    if terms.iter().all(|t| t.2.is_zero()) {
        return write!(f, "0");
    }
    let mut first = true;
    for (a, b, c) in terms.iter().filter(|t| !t.2.is_zero()) {
        let negative = prints_negative(c);
        let shown = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let is_constant = *a == 0 && *b == 0;
        if shown.is_one() && !is_constant {
            monomial(f, *a, *b)?;
            continue;
        }
        if shown.is_real() {
            write!(f, "{}", shown)?;
        } else {
            write!(f, "({})", shown)?;
        }
        if !is_constant {
            write!(f, "*")?;
            monomial(f, *a, *b)?;
        }
    }
    Ok(())
}

/// A coefficient gets a leading minus when its real part is negative, or it
/// is purely imaginary with negative imaginary part.
fn prints_negative(c: &Scalar) -> bool {
    use num_traits::{Signed, Zero};
    if c.re().is_zero() {
        c.im().is_negative()
    } else {
        c.re().is_negative()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(u32, u32, Scalar)> =
            self.terms.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect();
        terms.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        write_terms(f, &terms, |f, a, b| {
            write_power(f, "t", a, false)?;
            write_power(f, "d", b, a > 0)
        })
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{} in Weyl expression `{}` at {}", msg, self.src, self.pos))
    }

    fn integer(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("integer out of range"))
    }

    fn optional_divisor(&mut self) -> Result<Scalar> {
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.integer()?;
            if den == 0 {
                return Err(self.error("zero denominator"));
            }
            return Ok(Scalar::ratio(1, den as i64));
        }
        Ok(Scalar::one())
    }

    fn atom(&mut self) -> Result<WeylElement> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(WeylElement::t())
            }
            Some('d') | Some('∂') => {
                self.pos += 1;
                Ok(WeylElement::d())
            }
            Some('E') => {
                self.pos += 1;
                Ok(WeylElement::euler())
            }
            Some('i') => {
                self.pos += 1;
                let div = self.optional_divisor()?;
                Ok(WeylElement::constant(&Scalar::i() * &div))
            }
            Some('(') => {
                let start = self.pos + 1;
                let end = (start..self.chars.len())
                    .find(|&k| self.chars[k] == ')')
                    .ok_or_else(|| self.error("unclosed parenthesis"))?;
                let literal: String = self.chars[start..end].iter().collect();
                self.pos = end + 1;
                Ok(WeylElement::constant(literal.parse()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let div = self.optional_divisor()?;
                Ok(WeylElement::constant(&Scalar::from_int(num as i64) * &div))
            }
            _ => Err(self.error("unexpected character")),
        }
    }

    fn factor(&mut self) -> Result<WeylElement> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn term(&mut self) -> Result<WeylElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<WeylElement> {
        let mut acc = WeylElement::zero();
        let mut sign = Scalar::one();
        match self.peek() {
            Some('-') => {
                sign = Scalar::from_int(-1);
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            acc = acc.add(&self.term()?.scale(&sign));
            match self.peek() {
                Some('+') => sign = Scalar::one(),
                Some('-') => sign = Scalar::from_int(-1),
                None => return Ok(acc),
                Some(_) => return Err(self.error("expected + or -")),
            }
            self.pos += 1;
        }
    }
}

impl FromStr for WeylElement {
    type Err = Error;

    /// Parses sums of products such as `3*t^2*d + (1/3+1/2*i)*E - i/3`.
    /// Factors multiply in the order written, so `d*t` parses to `t*d + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        if p.chars.is_empty() {
            return Err(Error::Parse("empty Weyl expression".into()));
        }
        p.expr()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{D, T};

    fn w(s: &str) -> WeylElement {
        s.parse().unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let one = Scalar::one();
        assert_eq!(normal_form(&[(one.clone(), vec![D, T])]), w("t*d + 1"));
        assert_eq!(normal_form(&[(one.clone(), vec![T, D])]), w("t*d"));
        assert_eq!(normal_form(&[(one, vec![D, D, T])]), w("t*d^2 + 2*d"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(WeylElement::d().mul(&WeylElement::t()), w("t*d + 1"));
        let p = w("3*t^2*d - 1/2");
        assert_eq!(p.mul(&WeylElement::one()), p);
        let e = WeylElement::euler();
        assert_eq!(e.mul(&e), w("t^2*d^2 + t*d"));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(w("t^3*d").weight(), Some(2));
        assert_eq!(WeylElement::euler().weight(), Some(0));
        assert_eq!(w("t + d").weight(), None);
    }

    #[test]
    fn euler_power_examples() {
        assert_eq!(euler_power(&Scalar::ratio(1, 2), 1).unwrap(), w("t*d - 1/2"));
        assert_eq!(euler_power(&Scalar::zero(), 2).unwrap(), w("t^2*d^2 + t*d"));
        // (E - 1/2)^2 = E^2 - E + 1/4 = t^2 d^2 + t d - t d + 1/4
        assert_eq!(euler_power(&Scalar::ratio(1, 2), 2).unwrap(), w("t^2*d^2 + 1/4"));
        assert_eq!(euler_power(&Scalar::one(), 0), Err(Error::ZeroLength));
    }

    #[test]
    fn alternating_word_examples() {
        assert_eq!(alternating_word(Boundary::Zero, 1).unwrap(), WeylElement::d());
        assert_eq!(alternating_word(Boundary::Infinity, 1).unwrap(), WeylElement::t());
        assert_eq!(alternating_word(Boundary::Zero, 2).unwrap(), WeylElement::euler());
        assert_eq!(alternating_word(Boundary::Infinity, 2).unwrap(), w("t*d + 1"));
        assert_eq!(alternating_letters(Boundary::Zero, 3).unwrap(), vec![D, T, D]);
        assert!(alternating_word(Boundary::Zero, 0).is_err());
    }

    #[test]
    fn theta_form_examples() {
        let (d, g) = WeylElement::euler().to_theta_form().unwrap();
        assert_eq!((d, g.clone()), (0, EulerPolynomial::linear(Scalar::zero())));

        let (d, g) = w("t^2*d^2").to_theta_form().unwrap();
        assert_eq!(d, 0);
        assert_eq!(g, EulerPolynomial::new(vec![0.into(), (-1).into(), 1.into()]));

        let p = w("t^3*d");
        let (d, g) = p.to_theta_form().unwrap();
        assert_eq!(d, 2);
        assert_eq!(WeylElement::from_theta_form(d, &g), p);

        assert_eq!(w("t + d").to_theta_form(), Err(Error::Inhomogeneous));
    }

    #[test]
    fn theta_product_matches_multiplication() {
        for a in -4..=4 {
            for b in -4..=4 {
                let lhs = WeylElement::theta(a).mul(&WeylElement::theta(b));
                let rhs = WeylElement::from_theta_form(a + b, &theta_product(a, b));
                assert_eq!(lhs, rhs, "theta_{} theta_{}", a, b);
            }
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = EulerPolynomial::new(vec![1.into(), 2.into(), 1.into()]); // (E+1)^2
        assert_eq!(p.shift(&Scalar::from_int(-1)), EulerPolynomial::new(vec![0.into(), 0.into(), 1.into()]));
        let m = EulerPolynomial::linear(Scalar::one());
        assert!(p.rem(&m).is_zero());
        assert_eq!(p.eval(&Scalar::from_int(2)), Scalar::from_int(9));
    }

    #[test]
    fn printing_round_trips() {
        for s in ["t^2*d^2 + t*d", "-d", "(1/3+1/2*i)*t*d - 1/2", "0", "t - 3*d^2", "-1/2*i*t"] {
            let p = w(s);
            assert_eq!(p.to_string().parse::<WeylElement>().unwrap(), p, "{}", s);
        }
        assert_eq!(w("d*t").to_string(), "t*d + 1");
        assert!("t + ".parse::<WeylElement>().is_err());
        assert!("x".parse::<WeylElement>().is_err());
    }
}
