//! Sparse exact bivariate polynomials in the indeterminates `x` and `λ`
//! (spelled `l` in rendered output).
//!
//! This is the canonical value type for every polynomial family in the crate:
//! Bell polynomials live on the `λ`-degree-0 slice, Dowling polynomials on the
//! diagonal where `x`- and `λ`-degrees agree. The representation is a sorted
//! exponent map with no stored zero coefficients, so equality is coefficient-wise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::exact::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    // (x-degree, λ-degree) -> nonzero coefficient
    terms: BTreeMap<(u32, u32), Integer>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Integer) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(Integer::from(1))
    }

    /// The monomial `c * x^xd * l^ld`.
    pub fn monomial(xd: u32, ld: u32, c: Integer) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xd, ld), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Integer::from(1))
    }

    pub fn lambda() -> Self {
        Self::monomial(0, 1, Integer::from(1))
    }

    /// The product monomial `x*l`.
    pub fn xl() -> Self {
        Self::monomial(1, 1, Integer::from(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, xd: u32, ld: u32) -> Integer {
        self.terms.get(&(xd, ld)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Integer)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    /// True when every monomial has equal x- and λ-degree.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == j)
    }

    fn insert_add(&mut self, key: (u32, u32), v: Integer) {
        if v.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Integer::from(-1))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute both indeterminates with exact integers.
    pub fn eval(&self, x0: &Integer, l0: &Integer) -> Integer {
        let mut acc = Integer::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * x0.pow(i) * l0.pow(j);
        }
        acc
    }

    /// Specialize `λ` to an integer, leaving a polynomial in `x` alone.
    pub fn subst_lambda(&self, l0: &Integer) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.insert_add((i, 0), c * l0.pow(j));
        }
        out
    }

    /// Substitute `x -> p` for an arbitrary polynomial argument.
    pub fn subst_x(&self, p: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let t = p.pow(i).scale(c);
            for (&(a, b), v) in &t.terms {
                out.insert_add((a, b + j), v.clone());
            }
        }
        out
    }

    /// Canonical rendering: terms sorted descending by (x-degree, λ-degree),
    /// `λ` spelled `l`, e.g. `3*x^2*l^2 + 2*x*l + 5`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Integer::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != Integer::from(1) || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("l".to_string()),
                _ => factors.push(format!("l^{j}")),
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.insert_add(k, v.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.insert_add(k, -v.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
