//! Exact-arithmetic construction and machine verification of periodically
//! graded semisimple complex Lie algebras (Vinberg theta-groups): restricted
//! root hyperplane arrangements on a Cartan subspace, explicit complex
//! reflection lifts in the little Weyl group, and the certificates tying the
//! two together. All computation happens over cyclotomic number fields, so
//! every check is bit-exact.

pub mod exact;

pub mod roots;

pub mod algebra;
