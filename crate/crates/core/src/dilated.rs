//! Dilated floor functions `x -> floor(alpha*x + gamma)` and things built
//! from them: compositions, the ceiling dual `x -> ceil(alpha*x)`, the
//! semigroup `T_m(x) = floor(x/m)`, and the deviation of a two-fold
//! composition from the straight line through the origin.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::Rat;
use crate::error::{Error, Result};

/// `x -> floor(alpha * x + gamma)`. `gamma` is zero for a pure dilation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DilatedFloor {
    pub alpha: Rat,
    pub gamma: Rat,
}

impl DilatedFloor {
    pub fn new(alpha: Rat) -> Self {
        DilatedFloor { alpha, gamma: Rat::zero() }
    }

    pub fn affine(alpha: Rat, gamma: Rat) -> Self {
        DilatedFloor { alpha, gamma }
    }

    pub fn eval(&self, x: &Rat) -> BigInt {
        eval_affine(&self.alpha, &self.gamma, x)
    }
}

/// Dilation factors applied right to left: `[a, b, c]` is `f_a(f_b(f_c(x)))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositionChain {
    factors: Vec<Rat>,
}

impl CompositionChain {
    pub fn new(factors: Vec<Rat>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyChain);
        }
        Ok(CompositionChain { factors })
    }

    /// The chain `f_outer(f_inner(x))`.
    pub fn pair(outer: &Rat, inner: &Rat) -> Self {
        CompositionChain { factors: vec![outer.clone(), inner.clone()] }
    }

    /// Outermost first.
    pub fn factors(&self) -> &[Rat] {
        &self.factors
    }

    pub fn eval(&self, x: &Rat) -> BigInt {
        eval_chain(self, x)
    }
}

pub fn eval_dilated(alpha: &Rat, x: &Rat) -> BigInt {
    (alpha * x).floor()
}

pub fn eval_affine(alpha: &Rat, gamma: &Rat, x: &Rat) -> BigInt {
    (alpha * x + gamma).floor()
}

pub fn eval_chain(chain: &CompositionChain, x: &Rat) -> BigInt {
    let (innermost, rest) = chain.factors.split_last().expect("chain is non-empty");
    rest.iter()
        .rev()
        .fold(eval_dilated(innermost, x), |acc, alpha| eval_dilated(alpha, &Rat::from_int(acc)))
}

/// `floor(outer * floor(inner * x))` without building a chain.
pub fn eval_pair(outer: &Rat, inner: &Rat, x: &Rat) -> BigInt {
    eval_dilated(outer, &Rat::from_int(eval_dilated(inner, x)))
}

/// `ceil(alpha * x)`.
pub fn eval_ceiling_dual(alpha: &Rat, x: &Rat) -> BigInt {
    (alpha * x).ceil()
}

/// `T_m(x) = floor(x / m)` for `m >= 1`.
pub fn tm_eval(m: &BigInt, x: &Rat) -> Result<BigInt> {
    if !m.is_positive() {
        return Err(Error::InvalidTmIndex(m.to_string()));
    }
    let inv = Rat::new(1, m.clone())?;
    Ok(eval_dilated(&inv, x))
}

/// `floor(alpha * floor(beta * x)) - alpha * beta * x`, by direct evaluation.
pub fn h_diff(alpha: &Rat, beta: &Rat, x: &Rat) -> Rat {
    Rat::from_int(eval_pair(alpha, beta, x)) - alpha * beta * x
}

/// The same deviation written with fractional parts only:
/// `-alpha * {beta x} - {alpha * (beta x - {beta x})}`.
pub fn h_closed_form(alpha: &Rat, beta: &Rat, x: &Rat) -> Rat {
    let bx = beta * x;
    let bx_frac = bx.frac();
    let inner = alpha * (&bx - &bx_frac);
    -(alpha * &bx_frac) - inner.frac()
}
