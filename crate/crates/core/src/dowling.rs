//! Higher-order r-Dowling polynomials D^{λ,x}_{m,r}(n;α), the central object.
//!
//! The canonical value is the exact bivariate polynomial
//! `D(n) = Σ_k S(n,k;α,m,r)·(xλ)^k`, supported on the diagonal of the
//! (x,λ)-exponent lattice. Three independent routes must agree: the triangle
//! recurrence behind [`dowling_poly`], the explicit alternating sum (checked
//! as identity D6), and Hurwitz coefficients of
//! `e_α^r(z)·exp(xλ·(e_α^m(z)-1)/m)` ([`dowling_via_egf`]).
//!
//! The identity catalog D1–D11 (non-degenerate) and G1–G3 (degenerate) is
//! checked symbolically in x and λ wherever the statement permits. Where a
//! published formula is checked as printed and found wanting, the check runs
//! under a frozen corrected reading and the as-printed verdict is recorded as
//! an adjudication; see the statement strings and [`dowling_adjudications`].

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::exact::{binomial, gen_falling, int, multinomial, Integer, Rational};
use crate::gbell::bell_at;
use crate::gstirling::{
    gstirling_explicit, gstirling_table, gstirling_table_poly_r, GStirlingParams, GStirlingTriangle,
};
use crate::hurwitz::HurwitzSeries;
use crate::report::{Adjudication, CheckBuilder, GridConfig, IdentityReport};

/// Parameters of the Dowling family: m ≥ 1 block colors, r ≥ 0 distinguished
/// blocks, α ≥ 0 degeneracy (0 = non-degenerate).
///
/// The divisibility hypotheses stated with the degenerate theorems (α | m,
/// α | r) are deliberately not enforced: the polynomials are well defined for
/// all integer parameters, and the identity harness probes the wider grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DowlingParams {
    pub m: Integer,
    pub r: Integer,
    pub alpha: Integer,
}

impl DowlingParams {
    pub fn new(m: Integer, r: Integer, alpha: Integer) -> Result<Self> {
        if m < Integer::one() {
            return Err(Error::InvalidParams(format!("m must be >= 1, got {m}")));
        }
        if r < Integer::zero() || alpha < Integer::zero() {
            return Err(Error::InvalidParams(format!(
                "r and alpha must be >= 0, got r = {r}, alpha = {alpha}"
            )));
        }
        Ok(Self { m, r, alpha })
    }

    pub fn from_i64(m: i64, r: i64, alpha: i64) -> Result<Self> {
        Self::new(int(m), int(r), int(alpha))
    }

    /// The underlying generalized-Stirling parameter triple (α, m, r).
    pub fn stirling(&self) -> GStirlingParams {
        GStirlingParams::new(self.alpha.clone(), self.m.clone(), self.r.clone())
            .expect("m >= 1 keeps the triple nonzero")
    }
}

impl std::fmt::Display for DowlingParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m={}, r={}, alpha={})", self.m, self.r, self.alpha)
    }
}

/// An exact higher-order Dowling polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DowlingValue {
    pub n: u32,
    pub params: DowlingParams,
    pub poly: BiPoly,
}

impl DowlingValue {
    pub fn eval(&self, x0: &Integer, l0: &Integer) -> Integer {
        self.poly.eval(x0, l0)
    }
}

pub fn dowling_poly(n: u32, params: &DowlingParams) -> DowlingValue {
    let table = gstirling_table(&params.stirling(), n);
    DowlingValue {
        n,
        params: params.clone(),
        poly: bell_at(&table, n, &BiPoly::xl()),
    }
}

/// EGF route: Hurwitz coefficients `c_0..c_{n_max}` of
/// `e_α^r(z)·exp(x0·λ0·(e_α^m(z)-1)/m)`. A non-integral coefficient signals a
/// parameter inconsistency and is surfaced as an error.
pub fn dowling_via_egf(
    n_max: u32,
    params: &DowlingParams,
    x0: &Integer,
    l0: &Integer,
) -> Result<Vec<Integer>> {
    let order = n_max as usize;
    let ear = HurwitzSeries::deg_exp(&params.alpha, &params.r, order);
    let eam = HurwitzSeries::deg_exp(&params.alpha, &params.m, order);
    let mut inner = eam.coeffs().to_vec();
    inner[0] -= Rational::one();
    let scale = Rational::new(x0 * l0, params.m.clone());
    let series = ear.mul(&HurwitzSeries::from_coeffs(inner).scale(&scale).exp()?)?;
    (0..=order)
        .map(|n| {
            crate::exact::to_integer(
                series.coeff(n)?,
                &format!("dowling_via_egf({params}, x0={x0}, l0={l0}) at n={n}"),
            )
        })
        .collect()
}

/// Σ_k table[n][k]·arg^k over a polynomial-coefficient triangle.
fn poly_row_at(rows: &[Vec<BiPoly>], n: u32, arg: &BiPoly) -> BiPoly {
    let mut acc = BiPoly::zero();
    let mut argpow = BiPoly::one();
    let row = &rows[n as usize];
    for (k, coeff) in row.iter().enumerate() {
        acc = &acc + &(coeff * &argpow);
        if k + 1 < row.len() {
            argpow = &argpow * arg;
        }
    }
    acc
}

/// All weak compositions of `n` into `parts` parts.
fn compositions(n: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts as usize];
    fn rec(n: u32, idx: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            cur[idx] = n;
            out.push(cur.clone());
            return;
        }
        for first in 0..=n {
            cur[idx] = first;
            rec(n - first, idx + 1, cur, out);
        }
    }
    rec(n, 0, &mut cur, &mut out);
    out
}

/// The identity catalog. Statements are written in the canonical notation;
/// entries whose published form needed a frozen corrected reading say so.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DowlingIdentity {
    /// D(n+1) = r·D(n) + xλ·Σ_i C(n,i)·m^i·D(n-i)
    D1,
    /// D(n+1) = r·D(n) + xλ·D_{m,m+r}(n)
    D2,
    /// D(n+1) = r·D(n) + xλ·Σ_i C(n,i)·(m+r)^i·D_{m,0}(n-i)
    D3,
    /// D(n)|_{λ=λ0} = Σ_{e_1+…+e_{λ0+1}=n} multinomial·r^{e_1}·Π B_{e_j}(x;0,m,0)
    D4,
    /// D(n) = Σ_i C(n,i)·B_i(λx;0,m,0)·r^{n-i}  (λ^i absorbed into the argument)
    D5,
    /// Definitional route agreement: D(n) = Σ_i (λx)^i·S_explicit(n,i;0,m,r)
    D6,
    /// EGF route agreement at integer points
    D7,
    /// λ-scaled reading: D_{m,λr}(n) = Σ_j C(n,j)·λ^{n-j}(r-s)^{n-j}·D_{m,λs}(j)
    D8,
    /// As printed: D(n+1) = rλ·D(n) + xλ·Σ_j C(n,j)·D(j)·m^{n-j} (verdict recorded)
    D9,
    /// Grid-consistency of D9: residual equals r(λ-1)·D(n) everywhere (cross-ref D1)
    D9Consistency,
    /// D(n) = Σ_i (xλ)^i·Σ_{s=i}^n C(n,s)·r^{n-s}·m^{s-i}·S(s,i)
    D10,
    /// D(n) = Σ_k (xλ)^k·Σ_{e_0+…+e_k=n-k} r^{e_0}(r+m)^{e_1}…(r+km)^{e_k}
    D11,
    /// D(n+1;α) = r·D_{m,r-α}(n;α) + xλ·D_{m,m+r-α}(n;α)
    G1,
    /// D(n+1;α) = r·D_{m,r-α}(n;α) + xλ·Σ_i C(n,i)·(m+r|α)_i·B_{n-i}(xλ;α,m,-α)
    G2,
    /// D(n;α) = Σ_i C(n,i)·B_i(λx;α,m,0)·(r|α)_{n-i}
    G3,
}

impl DowlingIdentity {
    pub const ALL: [DowlingIdentity; 15] = [
        DowlingIdentity::D1,
        DowlingIdentity::D2,
        DowlingIdentity::D3,
        DowlingIdentity::D4,
        DowlingIdentity::D5,
        DowlingIdentity::D6,
        DowlingIdentity::D7,
        DowlingIdentity::D8,
        DowlingIdentity::D9,
        DowlingIdentity::D9Consistency,
        DowlingIdentity::D10,
        DowlingIdentity::D11,
        DowlingIdentity::G1,
        DowlingIdentity::G2,
        DowlingIdentity::G3,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            DowlingIdentity::D1 => "D1",
            DowlingIdentity::D2 => "D2",
            DowlingIdentity::D3 => "D3",
            DowlingIdentity::D4 => "D4",
            DowlingIdentity::D5 => "D5",
            DowlingIdentity::D6 => "D6",
            DowlingIdentity::D7 => "D7",
            DowlingIdentity::D8 => "D8",
            DowlingIdentity::D9 => "D9",
            DowlingIdentity::D9Consistency => "D9-consistency",
            DowlingIdentity::D10 => "D10",
            DowlingIdentity::D11 => "D11",
            DowlingIdentity::G1 => "G1",
            DowlingIdentity::G2 => "G2",
            DowlingIdentity::G3 => "G3",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            DowlingIdentity::D1 => "D(n+1) = r D(n) + xl sum_i C(n,i) m^i D(n-i)",
            DowlingIdentity::D2 => "D(n+1) = r D(n) + xl D_{m,m+r}(n)",
            DowlingIdentity::D3 => "D(n+1) = r D(n) + xl sum_i C(n,i) (m+r)^i D_{m,0}(n-i)",
            DowlingIdentity::D4 => {
                "D(n)|_{l=l0} = sum_{e_1+..+e_{l0+1}=n} multinomial r^{e_1} prod_j B_{e_j}(x;0,m,0)"
            }
            DowlingIdentity::D5 => {
                "D(n) = sum_i C(n,i) B_i(l*x;0,m,0) r^{n-i} [frozen: l^i absorbed into argument]"
            }
            DowlingIdentity::D6 => "D(n) = sum_i (l*x)^i S_explicit(n,i;0,m,r)",
            DowlingIdentity::D7 => "Hurwitz coefficients of the EGF equal D(n) at integer points",
            DowlingIdentity::D8 => {
                "D_{m,l*r}(n) = sum_j C(n,j) l^{n-j} (r-s)^{n-j} D_{m,l*s}(j) \
                 [frozen: distinguished-block weights l-scaled on both sides]"
            }
            DowlingIdentity::D9 => {
                "as printed: D(n+1) = r*l*D(n) + x*l sum_j C(n,j) D(j) m^{n-j} \
                 [verdict recorded, not asserted]"
            }
            DowlingIdentity::D9Consistency => {
                "residual of D9-as-printed equals r(l-1) D(n) on every cell (cross-ref D1)"
            }
            DowlingIdentity::D10 => {
                "D(n) = sum_i (x*l)^i sum_{s=i}^n C(n,s) r^{n-s} m^{s-i} S(s,i) \
                 [frozen: (x*l)^i weight, r^{n-s} exponent]"
            }
            DowlingIdentity::D11 => {
                "D(n) = sum_k (x*l)^k h_{n-k}(r, r+m, ..., r+km) [frozen: (x*l)^k weight]"
            }
            DowlingIdentity::G1 => {
                "D(n+1;a) = r D_{m,r-a}(n;a) + xl D_{m,m+r-a}(n;a) \
                 [frozen: second subscript pair read as (m, m+r-a)]"
            }
            DowlingIdentity::G2 => {
                "D(n+1;a) = r D_{m,r-a}(n;a) + xl sum_i C(n,i) (m+r|a)_i B_{n-i}(x*l;a,m,-a)"
            }
            DowlingIdentity::G3 => {
                "D(n;a) = sum_i C(n,i) B_i(l*x;a,m,0) (r|a)_{n-i} [index n-k read as n-i]"
            }
        }
    }

    /// D9 as printed is expected to mismatch; its verdict is report content.
    pub fn flagged(&self) -> bool {
        matches!(self, DowlingIdentity::D9)
    }

    fn degenerate(&self) -> bool {
        matches!(
            self,
            DowlingIdentity::G1 | DowlingIdentity::G2 | DowlingIdentity::G3
        )
    }
}

fn sparams(a: i64, b: i64, r: i64) -> GStirlingParams {
    GStirlingParams::from_i64(a, b, r).expect("m >= 1 keeps the triple nonzero")
}

fn table(a: i64, b: i64, r: i64, n_max: u32) -> GStirlingTriangle {
    gstirling_table(&sparams(a, b, r), n_max)
}

/// Check one identity at one grid point; pushes one cell per n into `builder`.
fn run_cells(
    id: DowlingIdentity,
    grid: &GridConfig,
    builder: &mut CheckBuilder,
    a: i64,
    m: i64,
    r: i64,
) {
    let n_max = grid.n_max;
    let xl = BiPoly::xl();
    let lam = BiPoly::lambda();
    let pstr = |extra: &str| {
        if extra.is_empty() {
            format!("(m={m}, r={r}, alpha={a})")
        } else {
            format!("(m={m}, r={r}, alpha={a}, {extra})")
        }
    };
    match id {
        DowlingIdentity::D1 => {
            let tr = table(0, m, r, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let mut sum = BiPoly::zero();
                for i in 0..=n {
                    let c = binomial(n, i as i64) * int(m).pow(i);
                    sum = &sum + &bell_at(&tr, n - i, &xl).scale(&c);
                }
                let rhs = &bell_at(&tr, n, &xl).scale(&int(r)) + &(&xl * &sum);
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D2 => {
            let tr = table(0, m, r, n_max + 1);
            let tmr = table(0, m, m + r, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let rhs = &bell_at(&tr, n, &xl).scale(&int(r)) + &(&xl * &bell_at(&tmr, n, &xl));
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D3 => {
            let tr = table(0, m, r, n_max + 1);
            let t0 = table(0, m, 0, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let mut sum = BiPoly::zero();
                for i in 0..=n {
                    let c = binomial(n, i as i64) * int(m + r).pow(i);
                    sum = &sum + &bell_at(&t0, n - i, &xl).scale(&c);
                }
                let rhs = &bell_at(&tr, n, &xl).scale(&int(r)) + &(&xl * &sum);
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D4 => {
            let tr = table(0, m, r, n_max);
            let t0 = table(0, m, 0, n_max);
            let x = BiPoly::x();
            for &l0 in &grid.lambdas {
                if l0 < 1 {
                    continue;
                }
                for n in 0..=n_max {
                    let lhs = bell_at(&tr, n, &xl).subst_lambda(&int(l0));
                    let mut rhs = BiPoly::zero();
                    for es in compositions(n, l0 as u32 + 1) {
                        let coef =
                            multinomial(n, &es).expect("composition sums to n") * int(r).pow(es[0]);
                        let mut term = BiPoly::constant(coef);
                        for &e in &es[1..] {
                            term = &term * &bell_at(&t0, e, &x);
                        }
                        rhs = &rhs + &term;
                    }
                    builder.cell(n, pstr(&format!("lambda={l0}")), &(&rhs - &lhs));
                }
            }
        }
        DowlingIdentity::D5 => {
            let tr = table(0, m, r, n_max);
            let t0 = table(0, m, 0, n_max);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n, &xl);
                let mut rhs = BiPoly::zero();
                for i in 0..=n {
                    let c = binomial(n, i as i64) * int(r).pow(n - i);
                    rhs = &rhs + &bell_at(&t0, i, &xl).scale(&c);
                }
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D6 => {
            let tr = table(0, m, r, n_max);
            let params = sparams(0, m, r);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n, &xl);
                let mut rhs = BiPoly::zero();
                let mut pw = BiPoly::one();
                for i in 0..=n {
                    let s = gstirling_explicit(n, i, &params)
                        .expect("beta = m >= 1 admits the explicit route");
                    rhs = &rhs + &pw.scale(&s);
                    if i < n {
                        pw = &pw * &xl;
                    }
                }
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D7 => {
            // inadmissible points (r < 0, alpha < 0) have no Dowling family
            let Ok(params) = DowlingParams::from_i64(m, r, a) else {
                return;
            };
            for &x0 in &grid.xs {
                for &l0 in &grid.xs {
                    let seq = dowling_via_egf(n_max, &params, &int(x0), &int(l0))
                        .expect("integral coefficients on the integer grid");
                    for n in 0..=n_max {
                        let direct = dowling_poly(n, &params).eval(&int(x0), &int(l0));
                        let diff = BiPoly::constant(seq[n as usize].clone() - direct);
                        builder.cell(n, pstr(&format!("x={x0}, lambda={l0}")), &diff);
                    }
                }
            }
        }
        DowlingIdentity::D8 => {
            // both sides over Z[λ]: distinguished-block weight r·λ
            for s in 0..=r {
                let rl = BiPoly::monomial(0, 1, int(r));
                let sl = BiPoly::monomial(0, 1, int(s));
                let tr = gstirling_table_poly_r(&int(0), &int(m), &rl, n_max);
                let ts = gstirling_table_poly_r(&int(0), &int(m), &sl, n_max);
                for n in 0..=n_max {
                    let lhs = poly_row_at(&tr, n, &xl);
                    let mut rhs = BiPoly::zero();
                    for j in 0..=n {
                        let c = binomial(n, j as i64) * int(r - s).pow(n - j);
                        let term = poly_row_at(&ts, j, &xl).scale(&c);
                        rhs = &rhs + &(&term * &lam.pow(n - j));
                    }
                    builder.cell(n, pstr(&format!("s={s}")), &(&rhs - &lhs));
                }
            }
        }
        DowlingIdentity::D9 => {
            let tr = table(0, m, r, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let mut sum = BiPoly::zero();
                for j in 0..=n {
                    let c = binomial(n, j as i64) * int(m).pow(n - j);
                    sum = &sum + &bell_at(&tr, j, &xl).scale(&c);
                }
                let rhs = &(&lam * &bell_at(&tr, n, &xl)).scale(&int(r)) + &(&xl * &sum);
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D9Consistency => {
            let tr = table(0, m, r, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let mut sum = BiPoly::zero();
                for j in 0..=n {
                    let c = binomial(n, j as i64) * int(m).pow(n - j);
                    sum = &sum + &bell_at(&tr, j, &xl).scale(&c);
                }
                let rhs = &(&lam * &bell_at(&tr, n, &xl)).scale(&int(r)) + &(&xl * &sum);
                let residual = &rhs - &lhs;
                // D1 predicts the residual exactly: r(λ-1)·D(n)
                let predicted = &(&lam - &BiPoly::one()) * &bell_at(&tr, n, &xl).scale(&int(r));
                builder.cell(n, pstr(""), &(&residual - &predicted));
            }
        }
        DowlingIdentity::D10 => {
            let tr = table(0, m, r, n_max);
            let s2 = table(0, 1, 0, n_max);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n, &xl);
                let mut rhs = BiPoly::zero();
                let mut pw = BiPoly::one();
                for i in 0..=n {
                    let mut c = Integer::zero();
                    for s in i..=n {
                        c += binomial(n, s as i64)
                            * int(r).pow(n - s)
                            * int(m).pow(s - i)
                            * s2.value(s, i as i64);
                    }
                    rhs = &rhs + &pw.scale(&c);
                    if i < n {
                        pw = &pw * &xl;
                    }
                }
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::D11 => {
            let tr = table(0, m, r, n_max);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n, &xl);
                let mut rhs = BiPoly::zero();
                let mut pw = BiPoly::one();
                for k in 0..=n {
                    let mut h = Integer::zero();
                    for es in compositions(n - k, k + 1) {
                        let mut term = Integer::one();
                        for (j, &e) in es.iter().enumerate() {
                            term *= int(r + j as i64 * m).pow(e);
                        }
                        h += term;
                    }
                    rhs = &rhs + &pw.scale(&h);
                    if k < n {
                        pw = &pw * &xl;
                    }
                }
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::G1 => {
            let tr = table(a, m, r, n_max + 1);
            let tra = table(a, m, r - a, n_max + 1);
            let tmra = table(a, m, m + r - a, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let rhs = &bell_at(&tra, n, &xl).scale(&int(r)) + &(&xl * &bell_at(&tmra, n, &xl));
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::G2 => {
            let tr = table(a, m, r, n_max + 1);
            let tra = table(a, m, r - a, n_max + 1);
            let tneg = table(a, m, -a, n_max + 1);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n + 1, &xl);
                let mut sum = BiPoly::zero();
                for i in 0..=n {
                    let c = binomial(n, i as i64) * gen_falling(&int(m + r), &int(a), i);
                    sum = &sum + &bell_at(&tneg, n - i, &xl).scale(&c);
                }
                let rhs = &bell_at(&tra, n, &xl).scale(&int(r)) + &(&xl * &sum);
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
        DowlingIdentity::G3 => {
            let tr = table(a, m, r, n_max);
            let t0 = table(a, m, 0, n_max);
            for n in 0..=n_max {
                let lhs = bell_at(&tr, n, &xl);
                let mut rhs = BiPoly::zero();
                for i in 0..=n {
                    let c = binomial(n, i as i64) * gen_falling(&int(r), &int(a), n - i);
                    rhs = &rhs + &bell_at(&t0, i, &xl).scale(&c);
                }
                builder.cell(n, pstr(""), &(&rhs - &lhs));
            }
        }
    }
}

/// Run selected identities over the grid. D1–D11 run at α = 0; G1–G3 sweep
/// the α grid. Checks are symbolic in x and λ except where the statement
/// demands an integer λ (D4) or an evaluation point (D7). Grid values must
/// keep the block parameter at m >= 1.
pub fn check_dowling_identities(ids: &[DowlingIdentity], grid: &GridConfig) -> IdentityReport {
    let mut report = IdentityReport::default();
    for &id in ids {
        let mut builder = CheckBuilder::new(id.id(), id.statement(), id.flagged());
        let alphas: &[i64] = if id.degenerate() { &grid.alphas } else { &[0] };
        for &a in alphas {
            for &m in &grid.ms {
                for &r in &grid.rs {
                    run_cells(id, grid, &mut builder, a, m, r);
                }
            }
        }
        report.checks.push(builder.finish());
    }
    report.adjudications.extend(dowling_adjudications());
    report
}

/// As-printed verdicts for the catalog entries that needed a frozen corrected
/// reading, each with a concrete first-mismatch witness.
pub fn dowling_adjudications() -> Vec<Adjudication> {
    let xl = BiPoly::xl();
    let lam = BiPoly::lambda();
    let x = BiPoly::x();
    let mut out = Vec::new();

    // D5 as printed: B_i(x;0,m,0)·λ^i instead of B_i(λx;0,m,0)
    {
        let (m, r, n) = (1i64, 0i64, 2u32);
        let tr = table(0, m, r, n);
        let t0 = table(0, m, 0, n);
        let lhs = bell_at(&tr, n, &xl);
        let mut rhs = BiPoly::zero();
        for i in 0..=n {
            let c = binomial(n, i as i64) * int(r).pow(n - i);
            rhs = &rhs + &(&bell_at(&t0, i, &x).scale(&c) * &lam.pow(i));
        }
        out.push(Adjudication {
            id: "d5-as-printed".to_string(),
            finding: "MISMATCH symbolically in lambda (agrees at lambda=1); frozen reading \
                      absorbs lambda^i into the Bell argument"
                .to_string(),
            evidence: vec![format!(
                "(m={m}, r={r}, n={n}): printed RHS = {}, D(n) = {}",
                rhs.render(),
                lhs.render()
            )],
        });
    }

    // D8 as printed: definitional D on both sides, extra λ^{n-j} kept
    {
        let (m, r, s, n) = (1i64, 1i64, 0i64, 1u32);
        let tr = table(0, m, r, n);
        let ts = table(0, m, s, n);
        let lhs = bell_at(&tr, n, &xl);
        let mut rhs = BiPoly::zero();
        for j in 0..=n {
            let c = binomial(n, j as i64) * int(r - s).pow(n - j);
            rhs = &rhs + &(&bell_at(&ts, j, &xl).scale(&c) * &lam.pow(n - j));
        }
        out.push(Adjudication {
            id: "d8-as-printed".to_string(),
            finding: "MISMATCH for 0 <= s < r with the definitional polynomial (agrees at \
                      lambda=1 and trivially at s=r); the proof's model scales every \
                      distinguished-block weight by lambda, so the frozen reading sets the \
                      r-parameters to lambda*r and lambda*s on both sides"
                .to_string(),
            evidence: vec![format!(
                "(m={m}, r={r}, s={s}, n={n}): printed RHS = {}, D(n) = {}",
                rhs.render(),
                lhs.render()
            )],
        });
    }

    // D9 as printed and its lambda-scaled repair
    {
        let (m, r, n) = (1i64, 1i64, 0u32);
        let tr = table(0, m, r, n + 1);
        let lhs = bell_at(&tr, n + 1, &xl);
        let rhs = &(&lam * &bell_at(&tr, n, &xl)).scale(&int(r))
            + &(&xl * &bell_at(&tr, n, &xl).scale(&binomial(n, 0)));
        let rl = BiPoly::monomial(0, 1, int(r));
        let trl = gstirling_table_poly_r(&int(0), &int(m), &rl, n + 1);
        let lhs_scaled = poly_row_at(&trl, n + 1, &xl);
        let rhs_scaled = &(&lam * &poly_row_at(&trl, n, &xl)).scale(&int(r))
            + &(&xl * &poly_row_at(&trl, n, &xl));
        out.push(Adjudication {
            id: "d9-as-printed".to_string(),
            finding: "MISMATCH for r >= 1 (reduces to D1 at r=0 or lambda=1); residual is \
                      exactly r(lambda-1)·D(n) on the whole grid, the difference between \
                      this statement's leading term r·lambda·D(n) and D1's r·D(n); the \
                      statement holds verbatim once both sides carry the lambda-scaled \
                      r-parameter (same repair as D8)"
                .to_string(),
            evidence: vec![
                format!(
                    "(m={m}, r={r}, n={n}): printed RHS = {}, D(n+1) = {}",
                    rhs.render(),
                    lhs.render()
                ),
                format!(
                    "lambda-scaled reading at the same point: RHS = {}, LHS = {}",
                    rhs_scaled.render(),
                    lhs_scaled.render()
                ),
            ],
        });
    }

    // D10 as printed: x^i weight (no λ) and r^{n-i} exponent
    {
        let (m, r, n) = (1i64, 0i64, 2u32);
        let tr = table(0, m, r, n);
        let s2 = table(0, 1, 0, n);
        let lhs = bell_at(&tr, n, &xl);
        let mut rhs = BiPoly::zero();
        for i in 0..=n {
            let mut c = Integer::zero();
            for s in i..=n {
                c += binomial(n, s as i64)
                    * int(r).pow(n - i)
                    * int(m).pow(s - i)
                    * s2.value(s, i as i64);
            }
            rhs = &rhs + &x.pow(i).scale(&c);
        }
        out.push(Adjudication {
            id: "d10-as-printed".to_string(),
            finding: "MISMATCH: the printed outer weight x^i has lambda-degree zero and the \
                      printed exponent r^{n-i} miscounts the distinguished placements \
                      (r^{n-s} is forced already at n=2); frozen reading uses (x*l)^i and \
                      r^{n-s}"
                .to_string(),
            evidence: vec![format!(
                "(m={m}, r={r}, n={n}): printed RHS = {}, D(n) = {}",
                rhs.render(),
                lhs.render()
            )],
        });
    }

    // D11 as printed: x^k weight (no λ)
    {
        let (m, r, n) = (1i64, 0i64, 1u32);
        let tr = table(0, m, r, n);
        let lhs = bell_at(&tr, n, &xl);
        let mut rhs = BiPoly::zero();
        for k in 0..=n {
            let mut h = Integer::zero();
            for es in compositions(n - k, k + 1) {
                let mut term = Integer::one();
                for (j, &e) in es.iter().enumerate() {
                    term *= int(r + j as i64 * m).pow(e);
                }
                h += term;
            }
            rhs = &rhs + &x.pow(k).scale(&h);
        }
        out.push(Adjudication {
            id: "d11-as-printed".to_string(),
            finding: "MISMATCH symbolically in lambda (agrees at lambda=1); frozen reading \
                      weights section k by (x*l)^k, matching the diagonal support of D(n)"
                .to_string(),
            evidence: vec![format!(
                "(m={m}, r={r}, n={n}): printed RHS = {}, D(n) = {}",
                rhs.render(),
                lhs.render()
            )],
        });
    }

    // G1 as printed: second term subscripts (m+r-α, r)
    {
        let (a, m, r, n) = (1i64, 1i64, 0i64, 1u32);
        let tr = table(a, m, r, n + 1);
        let tra = table(a, m, r - a, n + 1);
        let tswap = table(a, m + r - a, r, n + 1);
        let lhs = bell_at(&tr, n + 1, &xl);
        let rhs = &bell_at(&tra, n, &xl).scale(&int(r)) + &(&xl * &bell_at(&tswap, n, &xl));
        out.push(Adjudication {
            id: "g1-as-printed".to_string(),
            finding: "MISMATCH (agrees only when m = alpha): the printed second term \
                      D_{m+r-a, r} swaps the roles of the subscripts; the proof merges the \
                      new block with the special cell into a unit of m+r-a compartments \
                      acting as the special cell, i.e. D_{m, m+r-a}"
                .to_string(),
            evidence: vec![format!(
                "(alpha={a}, m={m}, r={r}, n={n}): printed RHS = {}, D(n+1;a) = {}",
                rhs.render(),
                lhs.render()
            )],
        });
    }

    // D4 binding of the section factors B_e(0,m,x)
    {
        let (m, r, l0, n) = (2i64, 1i64, 2u32, 2u32);
        let tr = table(0, m, r, n);
        let t0 = table(0, m, 0, n);
        let lhs = bell_at(&tr, n, &xl).subst_lambda(&int(l0 as i64));
        let build = |factor: &dyn Fn(u32) -> BiPoly| {
            let mut rhs = BiPoly::zero();
            for es in compositions(n, l0 + 1) {
                let coef = multinomial(n, &es).expect("composition sums to n") * int(r).pow(es[0]);
                let mut term = BiPoly::constant(coef);
                for &e in &es[1..] {
                    term = &term * &factor(e);
                }
                rhs = &rhs + &term;
            }
            rhs
        };
        let frozen = build(&|e| bell_at(&t0, e, &x));
        // literal slot reading: first argument 0 as the evaluation point,
        // x in the r-slot, giving S(e,0;0,m,x) = x^e
        let literal = build(&|e| {
            let tx = gstirling_table_poly_r(&int(0), &int(m), &BiPoly::x(), e);
            poly_row_at(&tx, e, &BiPoly::zero())
        });
        out.push(Adjudication {
            id: "d4-argument-binding".to_string(),
            finding: "frozen: section factors bind to B_e(x;0,m,0) (PASS); reading the \
                      printed B_e(0,m,x) with 0 as the evaluation point and x in the \
                      r-slot fails"
                .to_string(),
            evidence: vec![format!(
                "(m={m}, r={r}, lambda={l0}, n={n}): frozen RHS = {}, literal RHS = {}, \
                 D(n)|_lambda = {}",
                frozen.render(),
                literal.render(),
                lhs.render()
            )],
        });
    }

    // G2 binding candidates for B_{n-i}(α,m,0,x)
    {
        let mut evidence = Vec::new();
        for (label, rslot, arg) in [
            ("B(x*l; a,m,-a)", -1i64, &xl),
            ("B(x*l; a,m,0)", 0, &xl),
            ("B(x; a,m,0)", 0, &x),
        ] {
            let mut first_fail: Option<String> = None;
            'g2: for a in 0..=2i64 {
                for m in 1..=2i64 {
                    for r in 0..=2i64 {
                        let tr = table(a, m, r, 6);
                        let tra = table(a, m, r - a, 6);
                        let tc = table(a, m, rslot * a, 6);
                        for n in 0..=5u32 {
                            let lhs = bell_at(&tr, n + 1, &xl);
                            let mut sum = BiPoly::zero();
                            for i in 0..=n {
                                let c =
                                    binomial(n, i as i64) * gen_falling(&int(m + r), &int(a), i);
                                sum = &sum + &bell_at(&tc, n - i, arg).scale(&c);
                            }
                            let rhs = &bell_at(&tra, n, &xl).scale(&int(r)) + &(&xl * &sum);
                            if rhs != lhs {
                                first_fail = Some(format!(
                                    "first mismatch at n={n}, (alpha={a}, m={m}, r={r})"
                                ));
                                break 'g2;
                            }
                        }
                    }
                }
            }
            evidence.push(match first_fail {
                None => format!("G2 with {label}: PASS"),
                Some(w) => format!("G2 with {label}: MISMATCH ({w})"),
            });
        }
        out.push(Adjudication {
            id: "g2-argument-binding".to_string(),
            finding: "frozen: trailing factor binds to B_{n-i}(x*l; alpha, m, -alpha), the \
                      unique passing candidate (keeps the printed (m+r|a)_i factor)"
                .to_string(),
            evidence,
        });
    }

    // G3 as printed: λ^i·B_i(x;α,m,0) with (r|α)_{n-k}
    {
        let (a, m, r, n) = (0i64, 1i64, 0i64, 2u32);
        let tr = table(a, m, r, n);
        let t0 = table(a, m, 0, n);
        let lhs = bell_at(&tr, n, &xl);
        let mut rhs = BiPoly::zero();
        for i in 0..=n {
            let c = binomial(n, i as i64) * gen_falling(&int(r), &int(a), n - i);
            rhs = &rhs + &(&bell_at(&t0, i, &x).scale(&c) * &lam.pow(i));
        }
        out.push(Adjudication {
            id: "g3-as-printed".to_string(),
            finding: "MISMATCH symbolically in lambda (agrees at lambda=1); frozen reading \
                      absorbs lambda^i into the Bell argument as in D5, and reads the \
                      printed falling-factorial index n-k as n-i (the proof's index)"
                .to_string(),
            evidence: vec![format!(
                "(alpha={a}, m={m}, r={r}, n={n}): printed RHS = {}, D(n;a) = {}",
                rhs.render(),
                lhs.render()
            )],
        });
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn dparams(m: i64, r: i64, a: i64) -> DowlingParams {
        DowlingParams::from_i64(m, r, a).unwrap()
    }

    #[test]
    fn dowling_poly_examples() {
        assert_eq!(dowling_poly(0, &dparams(2, 1, 0)).poly, BiPoly::one());
        for (m, r, a) in [(1i64, 0i64, 0i64), (2, 1, 0), (3, 2, 2)] {
            let d = dowling_poly(1, &dparams(m, r, a));
            assert_eq!(d.poly.coeff(0, 0), int(r));
            assert_eq!(d.poly.coeff(1, 1), int(1));
        }
        // Bell number at the fully classical point
        assert_eq!(
            dowling_poly(3, &dparams(1, 0, 0)).eval(&int(1), &int(1)),
            int(5)
        );
        // D_{m,0}(1) = x*lambda
        for m in 1..=3 {
            assert_eq!(dowling_poly(1, &dparams(m, 0, 0)).poly, BiPoly::xl());
        }
    }

    #[test]
    fn dowling_poly_is_diagonal() {
        for m in 1..=3i64 {
            for r in 0..=2i64 {
                for a in 0..=2i64 {
                    for n in 0..=8u32 {
                        assert!(dowling_poly(n, &dparams(m, r, a)).poly.is_diagonal());
                    }
                }
            }
        }
    }

    #[test]
    fn egf_route_matches_bell_sequence() {
        let seq = dowling_via_egf(5, &dparams(1, 0, 0), &int(1), &int(1)).unwrap();
        let bell: Vec<Integer> = [1, 1, 2, 5, 15, 52].iter().map(|&v| int(v)).collect();
        assert_eq!(seq, bell);
        let seq0 = dowling_via_egf(4, &dparams(3, 2, 1), &int(2), &int(3)).unwrap();
        assert_eq!(seq0[0], int(1));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(DowlingParams::from_i64(0, 0, 0).is_err());
        assert!(DowlingParams::from_i64(1, -1, 0).is_err());
        assert!(DowlingParams::from_i64(1, 0, -1).is_err());
    }

    #[test]
    fn identity_suite_passes_on_reduced_grid() {
        let grid = GridConfig::with_n_max(7);
        let report = check_dowling_identities(&DowlingIdentity::ALL, &grid);
        for check in &report.checks {
            if check.flagged {
                continue;
            }
            assert_eq!(
                check.verdict(),
                Verdict::Pass,
                "{} failed: {:?}",
                check.id,
                check.mismatches.first()
            );
        }
        // D9 as printed must mismatch somewhere on this grid (r >= 1 cells)
        let d9 = report.find("D9").unwrap();
        assert_eq!(d9.verdict(), Verdict::Mismatch);
        assert!(report.all_unflagged_pass());
    }

    #[test]
    fn d9_reduces_to_d1_at_r_zero() {
        let grid = GridConfig {
            n_max: 6,
            rs: vec![0],
            ..GridConfig::default()
        };
        let report = check_dowling_identities(&[DowlingIdentity::D9], &grid);
        assert_eq!(report.find("D9").unwrap().verdict(), Verdict::Pass);
    }

    #[test]
    fn d8_trivial_at_s_equals_r() {
        // with r = s the only surviving term is j = n and both sides coincide
        let grid = GridConfig::with_n_max(5);
        let mut builder = CheckBuilder::new("D8", "", false);
        run_cells(DowlingIdentity::D8, &grid, &mut builder, 0, 2, 0);
        let check = builder.finish();
        assert_eq!(check.verdict(), Verdict::Pass);
    }

    #[test]
    fn adjudications_have_expected_findings() {
        let adjs = dowling_adjudications();
        let get = |id: &str| {
            adjs.iter()
                .find(|a| a.id == id)
                .unwrap_or_else(|| panic!("missing adjudication {id}"))
        };
        for id in [
            "d5-as-printed",
            "d8-as-printed",
            "d9-as-printed",
            "d10-as-printed",
            "d11-as-printed",
            "g1-as-printed",
            "g3-as-printed",
        ] {
            assert!(get(id).finding.starts_with("MISMATCH"), "{id}");
        }
        let g2 = get("g2-argument-binding");
        assert!(g2.evidence[0].contains("PASS"));
        assert!(g2.evidence[1].contains("MISMATCH"));
        assert!(g2.evidence[2].contains("MISMATCH"));
        let d4 = get("d4-argument-binding");
        assert!(d4.finding.starts_with("frozen"));
        // the frozen reading reproduces the specialized polynomial, the
        // literal slot reading does not
        let ev = &d4.evidence[0];
        let lhs = ev.split("D(n)|_lambda = ").nth(1).unwrap();
        assert!(ev.contains(&format!("frozen RHS = {lhs}")));
        assert!(!ev.contains(&format!("literal RHS = {lhs}")));
    }
}
