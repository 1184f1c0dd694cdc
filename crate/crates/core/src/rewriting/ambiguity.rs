use num_traits::One;

use super::{Certificate, RewriteRule};
use crate::algebra::{Polynomial, Rational, Word};

/// How two leading words interact on the ambiguous word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AmbiguityKind {
    /// `lead_first = p·s`, `lead_second = s·q`, ambiguous word `p·s·q`;
    /// `overlap` is the length of `s`.
    Overlap { overlap: usize },
    /// `lead_first = x·lead_second·y` with `x` of length `position`.
    Inclusion { position: usize },
}

/// An ambiguity of a rule pair with its obstruction: the difference of the
/// two one-step reductions of the ambiguous word.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub first: usize,
    pub second: usize,
    pub kind: AmbiguityKind,
    pub word: Word,
    pub obstruction: Polynomial,
    /// `obstruction = replay(certificate)`, in terms of the rules' sources.
    pub certificate: Certificate,
}

impl Ambiguity {
    pub fn degree(&self) -> usize {
        self.word.degree()
    }
}

/// Structural ambiguities between `a` (first) and `b` (second), with the
/// ambiguous word of each. `same_rule` marks `a` and `b` as one rule;
/// `ordered` says whether `a` precedes `b` (used to keep one of two equal leads).
pub(crate) fn pair_ambiguities(a: &Word, b: &Word, same_rule: bool, ordered: bool) -> Vec<(AmbiguityKind, Word)> {
    let (la, lb) = (a.letters(), b.letters());
    let mut out = Vec::new();
    for k in 1..la.len().min(lb.len()) {
        if la[la.len() - k..] == lb[..k] {
            let word = Word::from_letters([la, &lb[k..]].concat());
            out.push((AmbiguityKind::Overlap { overlap: k }, word));
        }
    }
    if !same_rule && lb.len() <= la.len() && (la != lb || ordered) {
        for pos in 0..=la.len() - lb.len() {
            if la[pos..pos + lb.len()] == *lb {
                out.push((AmbiguityKind::Inclusion { position: pos }, a.clone()));
            }
        }
    }
    out
}

/// Obstruction and its certificate for a structural ambiguity.
pub(crate) fn obstruction(a: &RewriteRule, b: &RewriteRule, kind: AmbiguityKind) -> (Polynomial, Certificate) {
    let one = Rational::one();
    let mut poly = Polynomial::zero();
    let mut cert = Certificate::new();
    let (la, lb) = (a.lead.letters(), b.lead.letters());
    match kind {
        AmbiguityKind::Overlap { overlap } => {
            // p·lead_b - lead_a·q  reduces to  rhs_a·q - p·rhs_b
            let p = Word::from_letters(&la[..la.len() - overlap]);
            let q = Word::from_letters(&lb[overlap..]);
            poly.add_sandwiched(&one, &Word::one(), &a.rhs, &q);
            poly.add_sandwiched(&-&one, &p, &b.rhs, &Word::one());
            cert.add(b.scale.clone(), p, b.source, Word::one());
            cert.add(-a.scale.clone(), Word::one(), a.source, q);
        }
        AmbiguityKind::Inclusion { position } => {
            let x = Word::from_letters(&la[..position]);
            let y = Word::from_letters(&la[position + lb.len()..]);
            poly.add_scaled(&one, &a.rhs);
            poly.add_sandwiched(&-&one, &x, &b.rhs, &y);
            cert.add(b.scale.clone(), x, b.source, y);
            cert.add(-a.scale.clone(), Word::one(), a.source, Word::one());
        }
    }
    (poly, cert)
}

/// Every overlap and inclusion ambiguity among `rules`, sorted by
/// (degree, first rule index, second rule index, kind).
pub fn overlap_ambiguities(rules: &[RewriteRule]) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for (i, a) in rules.iter().enumerate() {
        for (j, b) in rules.iter().enumerate() {
            for (kind, word) in pair_ambiguities(&a.lead, &b.lead, i == j, i < j) {
                let (poly, certificate) = obstruction(a, b, kind);
                out.push(Ambiguity { first: i, second: j, kind, word, obstruction: poly, certificate });
            }
        }
    }
    out.sort_by(|x, y| {
        (x.degree(), x.first, x.second, x.kind).cmp(&(y.degree(), y.first, y.second, y.kind))
    });
    out
}
