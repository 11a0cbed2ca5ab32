//! Real schemes of curves on real algebraic surfaces, Z4-valued quadratic
//! forms, and the congruences that restrict which schemes can occur.

pub mod classify;
pub mod congruence;
pub mod model;
pub mod parallel;
pub mod scheme;
pub mod zform;
