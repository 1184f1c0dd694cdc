//! Relations of `A_o(n)`, reduction with cofactor certificates, and
//! degree-truncated Gröbner completion in the free algebra.

mod ambiguity;
mod certificate;
mod completion;
mod exchange;
mod oracle;
mod relations;
mod rules;

pub use ambiguity::{overlap_ambiguities, Ambiguity, AmbiguityKind};
pub use certificate::{CertSummand, Certificate};
pub use completion::{complete, normal_words, DerivedRelation, SkippedAmbiguity, TruncatedGroebnerBasis};
pub use exchange::BasisDocument;
pub use oracle::{ao_filtration_dim_oracle, filtration_dim_oracle, OracleLimits};
pub use relations::{ao_relations, input_relations, Relation, RelationTag};
pub use rules::{RewriteRule, RuleSet};
