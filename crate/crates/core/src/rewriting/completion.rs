use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use num_traits::One;

use super::ambiguity::{obstruction, pair_ambiguities};
use super::{Ambiguity, AmbiguityKind, Certificate, Relation, RelationTag, RewriteRule, RuleSet};
use crate::algebra::{Alphabet, Polynomial, Rational, Word};
use crate::{Error, Result};

/// A polynomial introduced during completion, with the certificate that
/// expresses it through earlier relations.
#[derive(Debug)]
pub struct DerivedRelation {
    pub id: usize,
    pub poly: Polynomial,
    derivation: Option<Certificate>,
    expanded: OnceLock<Certificate>,
}

impl DerivedRelation {
    pub(crate) fn new(id: usize, poly: Polynomial, derivation: Option<Certificate>) -> Self {
        DerivedRelation { id, poly, derivation, expanded: OnceLock::new() }
    }

    pub fn derivation(&self) -> Option<&Certificate> {
        self.derivation.as_ref()
    }
}

/// An ambiguity above the degree bound, left unprocessed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedAmbiguity {
    pub degree: usize,
    pub first_lead: Word,
    pub second_lead: Word,
    pub kind: AmbiguityKind,
}

/// Interreduced rewrite rules whose ambiguities are all resolved up to
/// `complete_to`; below that degree normal forms are unique.
#[derive(Debug)]
pub struct TruncatedGroebnerBasis {
    alphabet: Alphabet,
    relations: Vec<Relation>,
    derived: BTreeMap<usize, DerivedRelation>,
    rules: RuleSet,
    degree_bound: usize,
    complete_to: usize,
    skipped: Vec<SkippedAmbiguity>,
    skipped_total: usize,
    relation_index: HashMap<RelationTag, usize>,
}

type QueueKey = (usize, usize, usize, AmbiguityKind);

struct Active {
    serial: usize,
    rule: RewriteRule,
}

struct Completer {
    degree_bound: usize,
    active: Vec<Active>,
    rules: RuleSet,
    derived: Vec<DerivedRelation>,
    pending: VecDeque<(Polynomial, Certificate)>,
    queue: BTreeSet<QueueKey>,
    next_serial: usize,
}

impl Completer {
    fn rebuild(&mut self) {
        self.rules = RuleSet::new(self.active.iter().map(|a| a.rule.clone()).collect());
    }

    fn new_derived(&mut self, poly: Polynomial, derivation: Certificate) -> RelationTag {
        let id = self.derived.len();
        self.derived.push(DerivedRelation::new(id, poly, Some(derivation)));
        RelationTag::Derived(id)
    }

    fn process_pending(&mut self) {
        while let Some((p, cert)) = self.pending.pop_front() {
            let (nf, reduction) = self.rules.reduce(&p);
            let Some((_, lc)) = nf.leading_term() else {
                continue;
            };
            let inv = lc.recip();
            let mut derivation = cert;
            derivation.add_scaled(&-Rational::one(), &reduction);
            let derivation = derivation.scale(&inv);
            let poly = nf.scale(&inv);
            let source = match derivation.summands().collect::<Vec<_>>().as_slice() {
                [s] if s.coeff.is_one() && s.left.is_one() && s.right.is_one() && s.tag.is_original() => s.tag,
                _ => self.new_derived(poly.clone(), derivation),
            };
            let mut rhs = -&poly;
            let lead = poly.leading_word().expect("nonzero").clone();
            rhs.add_term(lead.clone(), Rational::one());
            self.add_rule(RewriteRule { lead, rhs, source, scale: Rational::one() });
        }
    }

    fn add_rule(&mut self, rule: RewriteRule) {
        let serial = self.next_serial;
        self.next_serial += 1;
        let (removed, kept): (Vec<Active>, Vec<Active>) = std::mem::take(&mut self.active)
            .into_iter()
            .partition(|a| a.rule.lead.contains(rule.lead.letters()));
        for old in removed {
            let cert = Certificate::single(old.rule.source).scale(&old.rule.scale);
            self.pending.push_back((old.rule.polynomial(), cert));
        }
        self.active = kept;
        self.active.push(Active { serial, rule });
        self.rebuild();

        let mut changed = false;
        for k in 0..self.active.len() {
            if self.active[k].serial == serial {
                continue;
            }
            let rule = self.active[k].rule.clone();
            if rule.rhs.words().all(|w| self.rules.is_normal(w)) {
                continue;
            }
            let (nf, reduction) = self.rules.reduce(&rule.rhs);
            // lead - nf = (lead - rhs) + replay(reduction)
            let mut derivation = Certificate::single(rule.source).scale(&rule.scale);
            derivation.add_scaled(&Rational::one(), &reduction);
            let mut poly = -&nf;
            poly.add_term(rule.lead.clone(), Rational::one());
            let source = self.new_derived(poly, derivation);
            let rule = &mut self.active[k].rule;
            rule.rhs = nf;
            rule.source = source;
            rule.scale = Rational::one();
            changed = true;
        }
        if changed {
            self.rebuild();
        }

        let new_lead = self.active.last().expect("just pushed").rule.lead.clone();
        let others: Vec<(usize, Word)> =
            self.active.iter().map(|a| (a.serial, a.rule.lead.clone())).collect();
        for (other, lead) in others {
            let same = other == serial;
            for (kind, word) in pair_ambiguities(&new_lead, &lead, same, serial < other) {
                self.enqueue(word.degree(), serial, other, kind);
            }
            if !same {
                for (kind, word) in pair_ambiguities(&lead, &new_lead, false, other < serial) {
                    self.enqueue(word.degree(), other, serial, kind);
                }
            }
        }
    }

    fn enqueue(&mut self, degree: usize, a: usize, b: usize, kind: AmbiguityKind) {
        if degree <= self.degree_bound {
            self.queue.insert((degree, a, b, kind));
        }
    }

    fn find(&self, serial: usize) -> Option<&RewriteRule> {
        self.active
            .binary_search_by_key(&serial, |a| a.serial)
            .ok()
            .map(|k| &self.active[k].rule)
    }

    fn run(&mut self) {
        self.process_pending();
        while let Some(key) = self.queue.pop_first() {
            let (_, sa, sb, kind) = key;
            let (Some(a), Some(b)) = (self.find(sa), self.find(sb)) else {
                continue;
            };
            let (poly, cert) = obstruction(a, b, kind);
            self.pending.push_back((poly, cert));
            self.process_pending();
        }
    }
}

/// Completes `relations` by overlap resolution, processing ambiguities in
/// the order (degree, rule serials, kind) and never beyond `degree_bound`.
pub fn complete(alphabet: &Alphabet, relations: &[Relation], degree_bound: usize) -> Result<TruncatedGroebnerBasis> {
    if degree_bound < 2 {
        return Err(Error::Precondition("degree bound must be at least 2".into()));
    }
    if let Some(r) = relations.iter().find(|r| r.poly.degree().unwrap_or(0) > degree_bound) {
        return Err(Error::Precondition(format!(
            "relation {} has degree above the bound {degree_bound}",
            r.tag
        )));
    }
    let mut c = Completer {
        degree_bound,
        active: Vec::new(),
        rules: RuleSet::default(),
        derived: Vec::new(),
        pending: relations.iter().map(|r| (r.poly.clone(), Certificate::single(r.tag))).collect(),
        queue: BTreeSet::new(),
        next_serial: 0,
    };
    c.run();

    // Ambiguities among the final rules above the bound, for a targeted rerun.
    let leads: Vec<&Word> = c.active.iter().map(|a| &a.rule.lead).collect();
    let mut skipped = Vec::new();
    let mut skipped_total = 0;
    for (i, a) in leads.iter().enumerate() {
        for (j, b) in leads.iter().enumerate() {
            for (kind, word) in pair_ambiguities(a, b, i == j, i < j) {
                if word.degree() > degree_bound {
                    skipped_total += 1;
                    if word.degree() == degree_bound + 1 {
                        skipped.push(SkippedAmbiguity {
                            degree: word.degree(),
                            first_lead: (*a).clone(),
                            second_lead: (*b).clone(),
                            kind,
                        });
                    }
                }
            }
        }
    }

    let mut rules: Vec<RewriteRule> = c.active.into_iter().map(|a| a.rule).collect();
    rules.sort_by(|x, y| x.lead.cmp(&y.lead));
    Ok(TruncatedGroebnerBasis::assemble(
        alphabet.clone(),
        relations.to_vec(),
        c.derived.into_iter().map(|d| (d.id, d)).collect(),
        RuleSet::new(rules),
        degree_bound,
        degree_bound,
        skipped,
        skipped_total,
    ))
}

impl TruncatedGroebnerBasis {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        alphabet: Alphabet,
        relations: Vec<Relation>,
        derived: BTreeMap<usize, DerivedRelation>,
        rules: RuleSet,
        degree_bound: usize,
        complete_to: usize,
        skipped: Vec<SkippedAmbiguity>,
        skipped_total: usize,
    ) -> Self {
        let relation_index = relations.iter().enumerate().map(|(k, r)| (r.tag, k)).collect();
        TruncatedGroebnerBasis {
            alphabet,
            relations,
            derived,
            rules,
            degree_bound,
            complete_to,
            skipped,
            skipped_total,
            relation_index,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn derived(&self) -> &BTreeMap<usize, DerivedRelation> {
        &self.derived
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn complete_to(&self) -> usize {
        self.complete_to
    }

    /// Ambiguities of degree `degree_bound + 1` that were not processed.
    pub fn skipped(&self) -> &[SkippedAmbiguity] {
        &self.skipped
    }

    /// Number of unprocessed ambiguities of any degree above the bound.
    pub fn skipped_total(&self) -> usize {
        self.skipped_total
    }

    pub fn check_degree(&self, needed: usize) -> Result<()> {
        if needed > self.complete_to {
            Err(Error::CertificationExceeded { needed, certified: self.complete_to })
        } else {
            Ok(())
        }
    }

    pub fn relation_poly(&self, tag: &RelationTag) -> Option<&Polynomial> {
        match tag {
            RelationTag::Derived(k) => self.derived.get(k).map(|d| &d.poly),
            t => self.relation_index.get(t).map(|&k| &self.relations[k].poly),
        }
    }

    pub fn reduce(&self, f: &Polynomial) -> (Polynomial, Certificate) {
        self.rules.reduce(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.rules.normal_form(f)
    }

    /// `Σ coeff · left · relation · right`; panics on a tag foreign to this basis.
    pub fn replay(&self, cert: &Certificate) -> Polynomial {
        cert.replay(|t| self.relation_poly(t)).expect("certificate tag belongs to this basis")
    }

    /// Rewrites a certificate so that it only mentions the input relations.
    pub fn expand(&self, cert: &Certificate) -> Result<Certificate> {
        let mut out = Certificate::new();
        for s in cert.summands() {
            match s.tag {
                RelationTag::Derived(k) => {
                    let inner = self.expanded_derived(k)?;
                    out.add_sandwiched(&s.coeff, &s.left, inner, &s.right);
                }
                tag => out.add(s.coeff, s.left, tag, s.right),
            }
        }
        Ok(out)
    }

    fn expanded_derived(&self, k: usize) -> Result<&Certificate> {
        let d = self.derived.get(&k).ok_or(Error::MissingDerivation(k))?;
        if let Some(c) = d.expanded.get() {
            return Ok(c);
        }
        let derivation = d.derivation.as_ref().ok_or(Error::MissingDerivation(k))?;
        let expanded = self.expand(derivation)?;
        Ok(d.expanded.get_or_init(|| expanded))
    }

    /// Re-examines every ambiguity of the final rules up to `complete_to` and
    /// returns the ones whose obstruction does not reduce to zero.
    pub fn unresolved_ambiguities(&self) -> Vec<Ambiguity> {
        let rules = self.rules.rules();
        let mut out = Vec::new();
        for (i, a) in rules.iter().enumerate() {
            for (j, b) in rules.iter().enumerate() {
                for (kind, word) in pair_ambiguities(&a.lead, &b.lead, i == j, i < j) {
                    if word.degree() > self.complete_to {
                        continue;
                    }
                    let (poly, certificate) = obstruction(a, b, kind);
                    if !self.rules.normal_form(&poly).is_zero() {
                        out.push(Ambiguity { first: i, second: j, kind, word, obstruction: poly, certificate });
                    }
                }
            }
        }
        out
    }

    /// Normal words of degree at most `d`, increasing.
    pub fn normal_words(&self, d: usize) -> Result<Vec<Word>> {
        normal_words(self, d)
    }

    /// Number of normal words of each exact degree `0..=d`.
    pub fn normal_word_counts(&self, d: usize) -> Result<Vec<usize>> {
        let words = self.normal_words(d)?;
        let mut counts = vec![0; d + 1];
        for w in &words {
            counts[w.degree()] += 1;
        }
        Ok(counts)
    }
}

/// All words of degree at most `d` containing no leading word as a factor,
/// in increasing order; rejects `d` beyond the certified degree.
pub fn normal_words(tgb: &TruncatedGroebnerBasis, d: usize) -> Result<Vec<Word>> {
    tgb.check_degree(d)?;
    let rules = tgb.rules();
    let mut layer = vec![Word::one()];
    if !rules.is_normal(&Word::one()) {
        return Ok(Vec::new());
    }
    let mut out = layer.clone();
    for _ in 0..d {
        // a normal word's prefixes are normal, so only suffixes need checking
        let mut next = Vec::new();
        for w in &layer {
            for g in tgb.alphabet().generators() {
                let mut v = w.clone();
                v.push(g);
                if !rules.has_lead_suffix(v.letters()) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriting::{ao_relations, input_relations};

    #[test]
    fn involution_basis() {
        let a = Alphabet::matrix(1);
        let tgb = complete(&a, &ao_relations(&a).unwrap(), 4).unwrap();
        assert_eq!(tgb.complete_to(), 4);
        assert_eq!(tgb.rules().len(), 1);
        let rule = &tgb.rules().rules()[0];
        assert_eq!(rule.lead.display(&a).to_string(), "u11*u11");
        assert_eq!(rule.rhs, Polynomial::one());
        let words = tgb.normal_words(3).unwrap();
        assert_eq!(words, vec![Word::one(), Word::letter(a.u(1, 1))]);
        assert!(tgb.unresolved_ambiguities().is_empty());
    }

    #[test]
    fn rejects_small_bound_and_uncertified_degree() {
        let a = Alphabet::matrix(1);
        let rels = ao_relations(&a).unwrap();
        assert!(complete(&a, &rels, 1).is_err());
        let tgb = complete(&a, &rels, 3).unwrap();
        assert!(matches!(tgb.normal_words(4), Err(Error::CertificationExceeded { .. })));
    }

    #[test]
    fn commutative_plane_has_sorted_monomials() {
        let a = Alphabet::new(["x", "y"]);
        let rels = input_relations(&[Polynomial::parse("y*x - x*y", &a).unwrap()]);
        let tgb = complete(&a, &rels, 5).unwrap();
        assert_eq!(tgb.normal_word_counts(5).unwrap(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn derived_rules_expand_to_inputs() {
        let a = Alphabet::matrix(2);
        let rels = ao_relations(&a).unwrap();
        let tgb = complete(&a, &rels, 3).unwrap();
        for rule in tgb.rules().rules() {
            let cert = Certificate::single(rule.source).scale(&rule.scale);
            let expanded = tgb.expand(&cert).unwrap();
            assert!(expanded.tags().all(|t| t.is_original()));
            assert_eq!(tgb.replay(&expanded), rule.polynomial());
        }
    }

    #[test]
    fn deterministic() {
        let a = Alphabet::matrix(2);
        let rels = ao_relations(&a).unwrap();
        let x = complete(&a, &rels, 4).unwrap();
        let y = complete(&a, &rels, 4).unwrap();
        assert_eq!(x.rules().rules(), y.rules().rules());
    }
}
