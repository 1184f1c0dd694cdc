use std::collections::{BTreeSet, HashMap};

use num_traits::One;
use rand::Rng;

use super::{Certificate, Relation, RelationTag};
use crate::algebra::{Generator, Polynomial, Rational, Word};

/// `lead -> rhs`, where `lead - rhs = scale * (relation named by source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: Word,
    pub rhs: Polynomial,
    pub source: RelationTag,
    pub scale: Rational,
}

impl RewriteRule {
    /// Orients a nonzero polynomial by its leading word and makes it monic.
    pub fn from_relation(rel: &Relation) -> Option<RewriteRule> {
        let (lead, lc) = rel.poly.leading_term()?;
        let scale = lc.recip();
        let mut rhs = -&rel.poly.scale(&scale);
        rhs.add_term(lead.clone(), Rational::one());
        Some(RewriteRule { lead: lead.clone(), rhs, source: rel.tag, scale })
    }

    /// `lead - rhs`
    pub fn polynomial(&self) -> Polynomial {
        let mut p = -&self.rhs;
        p.add_term(self.lead.clone(), Rational::one());
        p
    }
}

/// An ordered list of rewrite rules with an index on leading words.
///
/// Reduction always rewrites the largest reducible word at its leftmost
/// reducible position; when several rules share a leading word the one
/// listed first is used.
#[derive(Clone, Debug, Default)]
pub struct RuleSet {
    rules: Vec<RewriteRule>,
    by_lead: HashMap<Vec<Generator>, usize>,
    lead_lengths: BTreeSet<usize>,
}

impl RuleSet {
    pub fn new(rules: Vec<RewriteRule>) -> Self {
        let mut by_lead = HashMap::new();
        let mut lead_lengths = BTreeSet::new();
        for (i, r) in rules.iter().enumerate() {
            by_lead.entry(r.lead.letters().to_vec()).or_insert(i);
            lead_lengths.insert(r.lead.degree());
        }
        RuleSet { rules, by_lead, lead_lengths }
    }

    /// One rule per nonzero relation, in input order; no interreduction.
    pub fn from_relations(relations: &[Relation]) -> Self {
        RuleSet::new(relations.iter().filter_map(RewriteRule::from_relation).collect())
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Leftmost position in `w` where some leading word occurs, with the rule.
    pub fn find_reducible(&self, w: &[Generator]) -> Option<(usize, usize)> {
        for start in 0..=w.len() {
            for &len in &self.lead_lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&r) = self.by_lead.get(&w[start..start + len]) {
                    return Some((start, r));
                }
            }
        }
        None
    }

    /// True if some leading word is a suffix of `w`.
    pub fn has_lead_suffix(&self, w: &[Generator]) -> bool {
        self.lead_lengths
            .iter()
            .take_while(|&&len| len <= w.len())
            .any(|&len| self.by_lead.contains_key(&w[w.len() - len..]))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_reducible(w.letters()).is_none()
    }

    fn rewrite_step(&self, work: &mut Polynomial, w: &Word, c: &Rational, pos: usize, r: usize) -> (Word, Word) {
        let rule = &self.rules[r];
        let letters = w.letters();
        let left = Word::from_letters(&letters[..pos]);
        let right = Word::from_letters(&letters[pos + rule.lead.degree()..]);
        work.add_sandwiched(c, &left, &rule.rhs, &right);
        (left, right)
    }

    /// Normal form of `f` and a certificate with
    /// `f = replay(certificate) + normal_form` exactly.
    pub fn reduce(&self, f: &Polynomial) -> (Polynomial, Certificate) {
        let mut work = f.clone();
        let mut nf = Polynomial::zero();
        let mut cert = Certificate::new();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_reducible(w.letters()) {
                Some((pos, r)) => {
                    let (left, right) = self.rewrite_step(&mut work, &w, &c, pos, r);
                    let rule = &self.rules[r];
                    cert.add(&c * &rule.scale, left, rule.source, right);
                }
                None => nf.add_term(w, c),
            }
        }
        (nf, cert)
    }

    /// Normal form without certificate bookkeeping.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut work = f.clone();
        let mut nf = Polynomial::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_reducible(w.letters()) {
                Some((pos, r)) => {
                    self.rewrite_step(&mut work, &w, &c, pos, r);
                }
                None => nf.add_term(w, c),
            }
        }
        nf
    }

    /// Reduces by repeatedly picking a random reducible term and a random
    /// occurrence of a random applicable rule. Used to probe confluence.
    pub fn normal_form_randomized(&self, f: &Polynomial, rng: &mut impl Rng) -> Polynomial {
        let mut work = f.clone();
        loop {
            let reducible: Vec<(Word, Rational)> = work
                .terms()
                .filter(|(w, _)| !self.is_normal(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect();
            if reducible.is_empty() {
                return work;
            }
            let (w, c) = &reducible[rng.random_range(0..reducible.len())];
            let letters = w.letters();
            let mut sites = Vec::new();
            for (r, rule) in self.rules.iter().enumerate() {
                let len = rule.lead.degree();
                for pos in 0..=letters.len().saturating_sub(len) {
                    if letters.len() >= len && letters[pos..pos + len] == *rule.lead.letters() {
                        sites.push((pos, r));
                    }
                }
            }
            let (pos, r) = sites[rng.random_range(0..sites.len())];
            work.add_term(w.clone(), -c.clone());
            self.rewrite_step(&mut work, w, c, pos, r);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Alphabet;
    use crate::rewriting::ao_relations;

    fn setup() -> (Alphabet, Vec<Relation>, RuleSet) {
        let a = Alphabet::matrix(2);
        let rels = ao_relations(&a).unwrap();
        let rules = RuleSet::from_relations(&rels);
        (a, rels, rules)
    }

    fn replay(cert: &Certificate, rels: &[Relation]) -> Polynomial {
        cert.replay(|t| rels.iter().find(|r| r.tag == *t).map(|r| &r.poly)).unwrap()
    }

    #[test]
    fn relation_reduces_to_zero_with_itself_as_certificate() {
        let (_, rels, rules) = setup();
        let r11 = &rels[0];
        let (nf, cert) = rules.reduce(&r11.poly);
        assert!(nf.is_zero());
        assert_eq!(cert, Certificate::single(RelationTag::R(1, 1)));
    }

    #[test]
    fn single_rewrite_step() {
        let (a, rels, rules) = setup();
        let f = Polynomial::parse("u12*u12", &a).unwrap();
        let (nf, cert) = rules.reduce(&f);
        assert_eq!(nf, Polynomial::parse("1 - u11*u11", &a).unwrap());
        assert_eq!(&replay(&cert, &rels) + &nf, f);
    }

    #[test]
    fn irreducible_word_is_untouched() {
        let (a, _, rules) = setup();
        // the eight initial leading words, scanned directly
        let leads: Vec<String> = rules.rules().iter().map(|r| r.lead.display(&a).to_string()).collect();
        assert_eq!(
            leads,
            ["u12*u12", "u12*u22", "u22*u12", "u22*u22", "u21*u21", "u21*u22", "u22*u21", "u22*u22"]
        );
        let f = Polynomial::parse("u11*u22", &a).unwrap();
        let (nf, cert) = rules.reduce(&f);
        assert_eq!(nf, f);
        assert!(cert.is_empty());
    }

    #[test]
    fn certificates_replay_on_random_input() {
        use rand::SeedableRng;
        let (_, rels, rules) = setup();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut f = Polynomial::zero();
            for _ in 0..4 {
                let len = rng.random_range(0..5);
                let w = Word::from_letters((0..len).map(|_| Generator(rng.random_range(0..4))).collect::<Vec<_>>());
                f.add_term(w, Rational::from_integer(rng.random_range(-2..=2).into()));
            }
            let (nf, cert) = rules.reduce(&f);
            assert_eq!(&replay(&cert, &rels) + &nf, f);
            assert!(nf.words().all(|w| rules.is_normal(w)));
            assert_eq!(rules.normal_form(&f), nf);
        }
    }
}
