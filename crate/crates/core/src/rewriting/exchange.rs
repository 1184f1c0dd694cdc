use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::completion::DerivedRelation;
use super::{Relation, RelationTag, RewriteRule, RuleSet, TruncatedGroebnerBasis};
use crate::algebra::{Alphabet, MonomialOrder, Polynomial, Rational, Word};
use crate::{Error, Result};

pub const FORMAT: &str = "aoq-groebner-basis";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    pub kind: String,
    pub precedence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub tag: String,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleDoc {
    pub lead: String,
    pub rhs: String,
    pub source: String,
}

/// JSON exchange form of a truncated basis. Derivations of completion
/// products are not carried, so a loaded basis reduces and replays
/// certificates but cannot expand derived rules into input relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDocument {
    pub format: String,
    pub version: u32,
    pub matrix_dim: Option<usize>,
    pub order: OrderDoc,
    pub degree_bound: usize,
    pub complete_to: usize,
    pub skipped_total: usize,
    pub relations: Vec<RelationDoc>,
    pub rules: Vec<RuleDoc>,
}

impl BasisDocument {
    pub fn from_basis(tgb: &TruncatedGroebnerBasis) -> Self {
        let a = tgb.alphabet();
        BasisDocument {
            format: FORMAT.to_string(),
            version: VERSION,
            matrix_dim: a.matrix_dim(),
            order: OrderDoc { kind: MonomialOrder::KIND.to_string(), precedence: a.names().to_vec() },
            degree_bound: tgb.degree_bound(),
            complete_to: tgb.complete_to(),
            skipped_total: tgb.skipped_total(),
            relations: tgb
                .relations()
                .iter()
                .map(|r| RelationDoc { tag: r.tag.to_string(), poly: r.poly.display(a).to_string() })
                .collect(),
            rules: tgb
                .rules()
                .rules()
                .iter()
                .map(|r| {
                    debug_assert!(r.scale == Rational::from_integer(1.into()));
                    RuleDoc {
                        lead: r.lead.display(a).to_string(),
                        rhs: r.rhs.display(a).to_string(),
                        source: r.source.to_string(),
                    }
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: BasisDocument = serde_json::from_str(text)?;
        if doc.format != FORMAT || doc.version != VERSION {
            return Err(Error::Format(format!("unsupported format {} v{}", doc.format, doc.version)));
        }
        if doc.order.kind != MonomialOrder::KIND {
            return Err(Error::Format(format!("unsupported order `{}`", doc.order.kind)));
        }
        Ok(doc)
    }

    fn alphabet(&self) -> Result<Alphabet> {
        match self.matrix_dim {
            None => Ok(Alphabet::new(self.order.precedence.iter().cloned())),
            Some(n) => {
                let standard = Alphabet::matrix(n);
                let entries = self
                    .order
                    .precedence
                    .iter()
                    .map(|name| {
                        standard
                            .lookup(name)
                            .and_then(|g| standard.entry(g))
                            .ok_or_else(|| Error::Format(format!("`{name}` is not a matrix generator")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Alphabet::matrix_with_precedence(n, &entries)
                    .ok_or_else(|| Error::Format("precedence is not a permutation".into()))
            }
        }
    }

    pub fn into_basis(self) -> Result<TruncatedGroebnerBasis> {
        let alphabet = self.alphabet()?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Ok(Relation { tag: r.tag.parse()?, poly: Polynomial::parse(&r.poly, &alphabet)? })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut derived = BTreeMap::new();
        let mut rules = Vec::new();
        for r in &self.rules {
            let lead_poly = Polynomial::parse(&r.lead, &alphabet)?;
            let lead: Word = match lead_poly.terms().collect::<Vec<_>>().as_slice() {
                [(w, c)] if **c == Rational::from_integer(1.into()) => (*w).clone(),
                _ => return Err(Error::Format(format!("lead `{}` is not a word", r.lead))),
            };
            let rhs = Polynomial::parse(&r.rhs, &alphabet)?;
            if rhs.leading_word().is_some_and(|w| *w >= lead) {
                return Err(Error::Format(format!("rule `{}` is not oriented", r.lead)));
            }
            let source: RelationTag = r.source.parse()?;
            let rule = RewriteRule { lead, rhs, source, scale: Rational::from_integer(1.into()) };
            if let RelationTag::Derived(k) = source {
                derived.insert(k, DerivedRelation::new(k, rule.polynomial(), None));
            }
            rules.push(rule);
        }
        Ok(TruncatedGroebnerBasis::assemble(
            alphabet,
            relations,
            derived,
            RuleSet::new(rules),
            self.degree_bound,
            self.complete_to,
            Vec::new(),
            self.skipped_total,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriting::{ao_relations, complete};

    #[test]
    fn exchange_roundtrip_is_bit_exact() {
        let order = [(2, 2), (1, 1), (2, 1), (1, 2)];
        let a = Alphabet::matrix_with_precedence(2, &order).unwrap();
        let tgb = complete(&a, &ao_relations(&a).unwrap(), 4).unwrap();
        let text = BasisDocument::from_basis(&tgb).to_json().unwrap();
        let loaded = BasisDocument::from_json(&text).unwrap().into_basis().unwrap();
        assert_eq!(loaded.alphabet(), tgb.alphabet());
        assert_eq!(loaded.rules().rules(), tgb.rules().rules());
        assert_eq!(BasisDocument::from_basis(&loaded).to_json().unwrap(), text);
        assert_eq!(loaded.normal_words(4).unwrap(), tgb.normal_words(4).unwrap());
    }

    #[test]
    fn rejects_foreign_documents() {
        assert!(BasisDocument::from_json("{}").is_err());
    }
}
