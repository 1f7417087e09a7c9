//! The bound formulas, transcribed as printed.
//!
//! Notation: `n` order, `m` size, `δ`/`Δ` minimum/maximum degree, `p` the
//! number of pendant vertices, `m̄2 = n(n-1) - 2m` (twice the size of the
//! complement).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::{BoundCheck, BoundFamily, BoundId, BoundValue, PairedGraph};
use crate::scalar::{binom, int, pow, pow_ratio, ExactScalar};
use crate::{Error, Result};

/// Degree data shared by every formula, as big integers.
struct Params {
    n: usize,
    k: usize,
    nb: BigInt,
    kb: BigInt,
    two_m: BigInt,
    two_m_bar: BigInt,
    delta: usize,
    max_degree: usize,
    pendants: usize,
}

impl Params {
    fn new(pair: &PairedGraph, k: usize) -> Self {
        let g = pair.graph();
        let n = g.n();
        let prof = pair.profile();
        Params {
            n,
            k,
            nb: BigInt::from(n),
            kb: BigInt::from(k),
            two_m: BigInt::from(2 * g.m()),
            two_m_bar: BigInt::from(n * (n - 1) - 2 * g.m()),
            delta: prof.min_degree,
            max_degree: prof.max_degree,
            pendants: prof.pendants,
        }
    }

    /// `C(n, k)`
    fn cnk(&self) -> BigInt {
        binom(self.n, self.k)
    }

    /// `C(n-1, k-1)`
    fn cn1k1(&self) -> BigInt {
        binom(self.n - 1, self.k - 1)
    }

    /// `n - δ - 1`, the maximum degree of the complement.
    fn co_max(&self) -> usize {
        self.n - self.delta - 1
    }

    /// `n - Δ - 1`, the minimum degree of the complement.
    fn co_min(&self) -> usize {
        self.n - self.max_degree - 1
    }

    fn k1(&self) -> BigInt {
        BigInt::from(self.k - 1)
    }
}

fn ratio(num: BigInt, den: BigInt) -> ExactScalar {
    ExactScalar::new(num, den)
}

fn rational(
    id: BoundId,
    case: &'static str,
    value: ExactScalar,
    actual: &ExactScalar,
) -> BoundCheck {
    BoundCheck::new(id, case, BoundValue::Rational(value), actual.clone())
}

/// Checks a family's preconditions in the order the errors are documented.
fn precondition(pair: &PairedGraph, family: BoundFamily, k: usize) -> Result<Params> {
    let n = pair.graph().n();
    if !pair.is_connected() {
        return Err(Error::Disconnected);
    }
    if family.needs_complement() && !pair.is_complement_connected() {
        return Err(Error::ComplementDisconnected);
    }
    if n < family.min_order() {
        return Err(Error::OrderTooSmall {
            n,
            min: family.min_order(),
        });
    }
    if k < 2 || k > n {
        return Err(Error::KOutOfRange { k, min: 2, max: n });
    }
    Ok(Params::new(pair, k))
}

/// The four (δ, Δ) cases of Theorem 3.2 and Corollary 4.1.
#[derive(Clone, Copy, PartialEq, Eq)]
enum DegreeCase {
    A,
    B,
    C,
    D,
}

impl DegreeCase {
    fn of(p: &Params) -> Result<Self> {
        let high_min = p.delta >= 2;
        let case = match (p.delta, p.max_degree) {
            (d, big) if d >= 1 && big + 3 <= p.n => {
                if high_min {
                    DegreeCase::A
                } else {
                    DegreeCase::C
                }
            }
            (d, big) if d >= 1 && big + 2 == p.n => {
                if high_min {
                    DegreeCase::B
                } else {
                    DegreeCase::D
                }
            }
            _ => {
                return Err(Error::NoCaseApplies {
                    delta: p.delta,
                    max_degree: p.max_degree,
                    n: p.n,
                })
            }
        };
        Ok(case)
    }

    fn label(self) -> &'static str {
        match self {
            DegreeCase::A => "delta>=2,Delta<=n-3",
            DegreeCase::B => "delta>=2,Delta=n-2",
            DegreeCase::C => "delta=1,Delta<=n-3",
            DegreeCase::D => "delta=1,Delta=n-2",
        }
    }
}

/// Proposition 2.1: degree-based upper and lower bounds on `SGut_k(G)`.
/// Requires `n >= 3`.
pub fn prop21(pair: &PairedGraph, k: usize) -> Result<[BoundCheck; 2]> {
    let p = precondition(pair, BoundFamily::Prop21, k)?;
    let actual = pair.sgut(k)?;
    let upper = ratio(
        &p.two_m * (p.n - 1) * p.cn1k1() * pow(p.max_degree, k - 1),
        p.kb.clone(),
    );
    let (case, lower) = if p.delta >= 2 {
        let v = ratio(
            &p.two_m * p.k1() * p.cn1k1() * pow(p.delta, k - 1),
            p.kb.clone(),
        );
        ("delta>=2", v)
    } else {
        // C(p, k) is zero when p < k
        let cpk = binom(p.pendants, k);
        let q = k.saturating_sub(p.pendants).max(1);
        let v = &p.kb * &cpk + pow(2u32, q) * p.k1() * (p.cnk() - &cpk);
        ("delta=1", int(v))
    };
    Ok([
        rational(BoundId::Prop21Upper, "", upper, &actual),
        rational(BoundId::Prop21Lower, case, lower, &actual),
    ])
}

/// Lemma 2.2: size-based upper and lower bounds on `SGut_k(G)`.
pub fn lem22(pair: &PairedGraph, k: usize) -> Result<[BoundCheck; 2]> {
    let p = precondition(pair, BoundFamily::Lem22, k)?;
    let actual = pair.sgut(k)?;
    let base = ratio(p.two_m.clone(), p.kb.clone());
    let upper = pow_ratio(&base, k) * int((p.n - 1) as u64) * int(pow(p.cn1k1(), k));
    let (case, lower) = if p.delta >= 2 {
        ("delta>=2", &p.two_m * p.k1() * p.cn1k1())
    } else {
        ("delta=1", p.k1() * p.cnk())
    };
    Ok([
        rational(BoundId::Lem22Upper, "", upper, &actual),
        rational(BoundId::Lem22Lower, case, int(lower), &actual),
    ])
}

/// Case A sum lower bound, shared by Theorem 3.2 and Corollary 4.1.
fn t1_sum_lower(p: &Params) -> BigInt {
    let t1 = p.delta.min(p.co_min());
    BigInt::from(p.n - 1) * p.k1() * p.cnk() * pow(t1, p.k - 1)
}

/// Theorem 3.2: Nordhaus–Gaddum sum and product bounds in `n, m, δ, Δ`,
/// with `s1 = max{Δ, n-δ-1}`.
pub fn thm32(pair: &PairedGraph, k: usize) -> Result<Vec<BoundCheck>> {
    let p = precondition(pair, BoundFamily::Thm32, k)?;
    let case = DegreeCase::of(&p)?;
    let sum = pair.actual(super::Quantity::Sum, k)?;
    let product = pair.actual(super::Quantity::Product, k)?;
    let n1 = BigInt::from(p.n - 1);
    let k2 = &p.kb * &p.kb;
    let cn1k1 = p.cn1k1();
    let cnk = p.cnk();

    let s1 = p.max_degree.max(p.co_max());
    let sum_upper = &n1 * &n1 * &cnk * pow(s1, k - 1);
    let product_upper = ratio(
        &p.two_m
            * &p.two_m_bar
            * &n1
            * &n1
            * &cn1k1
            * &cn1k1
            * pow(p.max_degree, k - 1)
            * pow(p.co_max(), k - 1),
        k2.clone(),
    );

    let sum_lower = match case {
        DegreeCase::A => int(t1_sum_lower(&p)),
        DegreeCase::B => {
            ratio(
                &p.two_m * p.k1() * &cn1k1 * pow(p.delta, k - 1),
                p.kb.clone(),
            ) + int(&p.kb * &cnk)
        }
        DegreeCase::C => {
            int(&p.kb * &cnk)
                + ratio(
                    &p.two_m_bar * p.k1() * &cn1k1 * pow(p.co_min(), k - 1),
                    p.kb.clone(),
                )
        }
        DegreeCase::D => int(2u32 * &p.kb * &cnk),
    };
    let product_lower = match case {
        DegreeCase::A => ratio(
            &p.two_m
                * &p.two_m_bar
                * p.k1()
                * p.k1()
                * &cn1k1
                * &cn1k1
                * pow(p.delta, k - 1)
                * pow(p.co_min(), k - 1),
            k2.clone(),
        ),
        DegreeCase::B => int(&p.two_m * p.k1() * &cnk * &cn1k1 * pow(p.delta, k - 1)),
        DegreeCase::C => int(&p.two_m_bar * p.k1() * &cnk * &cn1k1 * pow(p.co_min(), k - 1)),
        DegreeCase::D => int(&k2 * &cnk * &cnk),
    };

    Ok(vec![
        rational(BoundId::Thm32SumUpper, "s1=max", int(sum_upper), &sum),
        rational(BoundId::Thm32ProductUpper, "", product_upper, &product),
        rational(BoundId::Thm32SumLower, case.label(), sum_lower, &sum),
        rational(
            BoundId::Thm32ProductLower,
            case.label(),
            product_lower,
            &product,
        ),
    ])
}

/// Corollary 4.1: the `m`-free form of Theorem 3.2, with
/// `s1 = min{Δ, n-δ-1}` as printed. Requires `n >= 4`.
pub fn cor41(pair: &PairedGraph, k: usize) -> Result<Vec<BoundCheck>> {
    let p = precondition(pair, BoundFamily::Cor41, k)?;
    let case = DegreeCase::of(&p)?;
    let sum = pair.actual(super::Quantity::Sum, k)?;
    let product = pair.actual(super::Quantity::Product, k)?;
    let n1 = BigInt::from(p.n - 1);
    let k2 = &p.kb * &p.kb;
    let cn1k1 = p.cn1k1();
    let cnk = p.cnk();

    let s1 = p.max_degree.min(p.co_max());
    let sum_upper = &n1 * &n1 * &cnk * pow(s1, k - 1);
    let product_upper = ratio(
        &p.nb
            * &p.nb
            * &cn1k1
            * &cn1k1
            * pow(p.max_degree, k - 1)
            * pow(p.co_max(), k - 1)
            * pow(n1.clone(), 4),
        4u32 * &k2,
    );

    let sum_lower = match case {
        DegreeCase::A => int(t1_sum_lower(&p)),
        DegreeCase::B => {
            ratio(&p.nb * p.k1() * &cn1k1 * pow(p.delta, k), p.kb.clone()) + int(&p.kb * &cnk)
        }
        DegreeCase::C => {
            int(&p.kb * &cnk) + ratio(&p.nb * p.k1() * &cn1k1 * pow(p.co_min(), k), p.kb.clone())
        }
        DegreeCase::D => int(2u32 * &p.kb * &cnk),
    };
    let product_lower = match case {
        DegreeCase::A => ratio(
            &p.nb
                * &p.nb
                * p.k1()
                * p.k1()
                * &cn1k1
                * &cn1k1
                * pow(p.delta, k)
                * pow(p.co_min(), k),
            k2.clone(),
        ),
        DegreeCase::B => int(&p.nb * p.k1() * &cnk * &cn1k1 * pow(p.delta, k)),
        DegreeCase::C => int(&p.nb * p.k1() * &cnk * &cn1k1 * pow(p.co_min(), k)),
        DegreeCase::D => int(&k2 * &cnk * &cnk),
    };

    Ok(vec![
        rational(BoundId::Cor41SumUpper, "s1=min", int(sum_upper), &sum),
        rational(BoundId::Cor41ProductUpper, "", product_upper, &product),
        rational(BoundId::Cor41SumLower, case.label(), sum_lower, &sum),
        rational(
            BoundId::Cor41ProductLower,
            case.label(),
            product_lower,
            &product,
        ),
    ])
}

const BRANCH_DELTA: &str = "Delta+delta<=n-1";
const BRANCH_MAX: &str = "Delta+delta>=n-1";

/// The branches of a bound cased on `Δ + δ` against `n - 1`: one when the
/// inequality is strict, both (the stronger marked binding) on equality.
fn degree_sum_branches(
    p: &Params,
    id: BoundId,
    actual: &ExactScalar,
    value: impl Fn(usize, usize) -> BoundValue,
) -> Vec<BoundCheck> {
    let by_delta = || BoundCheck::new(id, BRANCH_DELTA, value(p.delta, p.co_max()), actual.clone());
    let by_max = || {
        BoundCheck::new(
            id,
            BRANCH_MAX,
            value(p.max_degree, p.co_min()),
            actual.clone(),
        )
    };
    match (p.max_degree + p.delta).cmp(&(p.n - 1)) {
        Ordering::Less => vec![by_delta()],
        Ordering::Greater => vec![by_max()],
        Ordering::Equal => {
            let mut both = vec![by_delta(), by_max()];
            // every branch here is a lower bound: the larger one binds
            let second_stronger =
                both[1].bound_value.compare(&both[0].bound_value) == Ordering::Greater;
            both[usize::from(!second_stronger)].binding = false;
            both
        }
    }
}

/// Pólya–Szegő product bounds on `SGut_k(G) · SGut_k(Ḡ)`.
pub fn ps_product(pair: &PairedGraph, k: usize) -> Result<Vec<BoundCheck>> {
    let p = precondition(pair, BoundFamily::PsProduct, k)?;
    let low_side = p.delta * p.co_min();
    if low_side == 0 {
        return Err(Error::DegenerateDegrees);
    }
    let product = pair.actual(super::Quantity::Product, k)?;
    let cnk = p.cnk();
    let mut checks = degree_sum_branches(&p, BoundId::PsProductLower, &product, |a, b| {
        BoundValue::Rational(int(p.k1() * p.k1() * pow(a, k) * pow(b, k) * &cnk * &cnk))
    });

    let x = ratio(
        BigInt::from(p.max_degree * p.co_max()),
        BigInt::from(low_side),
    );
    let x_k = pow_ratio(&x, k);
    let bracket = x_k.recip() + &x_k + int(2);
    let scale = ratio(pow(p.n - 1, 2 * k + 2), pow(2u32, 2 * k + 2));
    let upper = scale * int(&cnk * &cnk) * bracket;
    checks.push(rational(BoundId::PsProductUpper, "", upper, &product));
    Ok(checks)
}

/// AM-GM sum bounds on `SGut_k(G) + SGut_k(Ḡ)`. For odd `k` the lower
/// bound is irrational and kept as its exact square.
pub fn amgm_sum(pair: &PairedGraph, k: usize) -> Result<Vec<BoundCheck>> {
    let p = precondition(pair, BoundFamily::AmgmSum, k)?;
    let sum = pair.actual(super::Quantity::Sum, k)?;
    let cnk = p.cnk();
    let coef = 2u32 * p.k1() * &cnk;
    let mut checks = degree_sum_branches(&p, BoundId::AmgmSumLower, &sum, |a, b| {
        BoundValue::sqrt_of(int(&coef * &coef * pow(a * b, k)))
    });
    let upper = BigInt::from(p.n - 1) * (pow(p.max_degree, k) + pow(p.co_max(), k)) * &cnk;
    checks.push(rational(BoundId::AmgmSumUpper, "", int(upper), &sum));
    Ok(checks)
}
