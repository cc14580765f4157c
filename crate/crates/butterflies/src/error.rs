//! Error type shared by all validating constructors.
//!
//! Every validation failure carries a witness (the first offending element,
//! pair, or triple in scan order) so that a rejected input can be debugged
//! without re-running the check by hand.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is not square or has an out-of-range entry at row {row}, col {col}")]
    MalformedTable { row: usize, col: usize },
    #[error("no two-sided identity element in the multiplication table")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds the size limit {limit}")]
    SizeLimit { order: usize, limit: usize },

    #[error("map is not a homomorphism: image({g}*{h}) != image({g})*image({h})")]
    NotHomomorphism { g: usize, h: usize },
    #[error("hom image array has length {got}, domain has order {expected}")]
    HomLengthMismatch { got: usize, expected: usize },
    #[error("hom image entry {value} is out of range for the codomain")]
    HomOutOfRange { value: usize },

    #[error("subset is not a subgroup (fails at elements {a}, {b})")]
    NotSubgroup { a: usize, b: usize },
    #[error("subgroup is not normal: conjugate of {element} by {by} escapes the subgroup")]
    NotNormal { element: usize, by: usize },

    #[error("action table has the wrong shape")]
    MalformedAction,
    #[error("action does not fix points under the identity: element {alpha}")]
    ActionIdentityFails { alpha: usize },
    #[error("action is not compatible with multiplication at alpha={alpha}, g={g}, h={h}")]
    ActionCompatFails { alpha: usize, g: usize, h: usize },
    #[error("action by {g} is not a group automorphism (fails at {alpha}, {beta})")]
    ActionNotAutomorphism { g: usize, alpha: usize, beta: usize },

    #[error("semidirect data invalid: {reason}")]
    IncompatibleData { reason: String },
    #[error("map is not a crossed homomorphism at ({k}, {kprime})")]
    NotCrossedHom { k: usize, kprime: usize },
    #[error("pushforward triangle fails: {reason}")]
    TriangleFails { reason: String },

    #[error("CM1 fails at alpha={alpha}, beta={beta}")]
    Cm1Fails { alpha: usize, beta: usize },
    #[error("CM2 fails at beta={beta}, a={a}")]
    Cm2Fails { beta: usize, a: usize },
    #[error("boundary map is not a homomorphism")]
    BoundaryNotHom,
    #[error("not a strict morphism of crossed-modules: {reason}")]
    NotStrictMorphism { reason: String },
    #[error("transformation condition T1 fails at h={h}")]
    T1Fails { h: usize },
    #[error("transformation condition T2 fails at beta={beta}")]
    T2Fails { beta: usize },
    #[error("crossed homomorphism law for the transformation fails at ({h}, {hprime})")]
    ThetaNotCrossed { h: usize, hprime: usize },
    #[error("pushout hypotheses fail: {reason}")]
    HypothesesFail { reason: String },
    #[error("section datum invalid: {reason}")]
    SectionInvalid { reason: String },

    #[error("diagonal sequence is not a complex at {position}")]
    NotComplex { position: String },
    #[error("NE-SW sequence is not short exact: {reason}")]
    NeswNotExact { reason: String },
    #[error("butterfly equivariance fails at x={x}, element {element}")]
    EquivarianceFails { x: usize, element: usize },
    #[error("map is not a section of the projection")]
    NotASection,
    #[error("butterfly sources or targets do not match")]
    TypeMismatch,
    #[error("butterfly is not a weak equivalence")]
    NotAnEquivalence,
    #[error("exact sequence check fails at position {position} ({detail})")]
    ExactnessFails { position: usize, detail: String },
    #[error("precondition fails: {reason}")]
    PrecondFails { reason: String },
    #[error("braiding convention fails: boundary of brace({x},{y}) is not the commutator")]
    BraidingConventionFails { x: usize, y: usize },
    #[error("butterfly is not braided: condition fails at x={x}, y={y}")]
    NotBraided { x: usize, y: usize },

    #[error("cocycle data does not define a group: {reason}")]
    NotAGroup { reason: String },
    #[error("butterfly axiom fails on the cocycle-built data: {reason}")]
    ButterflyAxiomFails { reason: String },
    #[error("cochain is not a cocycle (fails on a tuple)")]
    NotACocycle,

    #[error("sequence is not semi-exact: {reason}")]
    NotSemiExact { reason: String },
    #[error("outer actions on the kernel disagree")]
    PsiMismatch,
    #[error("butterflies induce different maps on pi1")]
    ChiMismatch,
    #[error("module action mismatch: {reason}")]
    ActionMismatch { reason: String },
    #[error("homomorphism does not lift the given pi1 map: {reason}")]
    NotALift { reason: String },
    #[error("not an extension: {reason}")]
    NotExtension { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
