#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/coefficients.md")]
mod coefficients {}

#[doc = include_str!("../../../book/src/log-derivatives.md")]
mod log_derivatives {}

#[doc = include_str!("../../../book/src/kronecker.md")]
mod kronecker {}

#[doc = include_str!("../../../book/src/semigroups.md")]
mod semigroups {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}

#[doc = include_str!("../../../README.md")]
mod readme {}
