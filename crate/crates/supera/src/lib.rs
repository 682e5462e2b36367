//! Exact computer algebra for colored superpolynomials of simple knots and
//! the super-A-polynomials that govern their color dependence.
//!
//! The crate is organized around one exact carrier type,
//! [`poly::LaurentPoly`] — sparse multivariate Laurent polynomials over the
//! Gaussian rationals with half-integer exponents on `a`, `q`, `t` — and
//! builds up from it:
//!
//! * [`qcalc`] — q-Pochhammer symbols and Gaussian binomials;
//! * [`knots`] — closed-form colored superpolynomial generators and the
//!   specialization cascade down to HOMFLY and Jones polynomials;
//! * [`recursion`] — q-difference operators acting on superpolynomial
//!   sequences, annihilation checks, classical `q -> 1` limits, and
//!   ansatz-based operator guessing;
//! * [`elimination`] — saddle-point systems and resultant elimination to the
//!   classical curves, independently of the recursion route;
//! * [`quantize`] — Newton polygons, face polynomials and the temperedness
//!   (roots-of-unity) test for quantizability;
//! * [`numerics`] — complex dilogarithms, saddle solving and asymptotic
//!   validation of the large-color behavior.

pub mod poly;
pub mod elimination;
pub mod knots;
pub mod qcalc;
pub mod recursion;
