//! Exact verification of binomial convolution identities for symmetric
//! functions of two letters, evaluated over indeterminates and over the
//! Binet roots of the bivariate Fibonacci and balancing families.

pub mod arith;
pub mod egf;
pub mod identities;
pub mod quadext;
pub mod report;
pub mod sequences;
pub mod symfun;
