//! Executable walk through the argument that a non-Hamiltonian k-connected
//! graph with `chi >= n - k` is extremal. Every claim the argument makes is
//! checked on the concrete graph and recorded as a step; the first failing
//! step ends the trace.
//!
//! Text form, one step per line:
//! `<id> TAB <PASS|FAIL> TAB <description> TAB <key=value ...>`.

use std::fmt;

use super::{check_hypothesis, recognize_extremal, ExtremalPartition};
use crate::cycles::{
    extend_case1_rotation, extend_offcycle, extend_predecessor_chord, find_hamiltonian_cycle, longest_cycle, segments,
    successors_set, LONGEST_CYCLE_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, clique_number, independence_number, menger_fan, Coloring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub witness: Vec<(String, String)>,
}

impl Step {
    pub fn witness(&self, key: &str) -> Option<&str> {
        self.witness.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{}\t{}\t{}\t", self.id, verdict, self.description)?;
        for (i, (k, v)) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// A Hamiltonian cycle exists; nothing to prove.
    Hamiltonian,
    /// Case 0 ending: `G = K_k ∨ K_{k+1}^c`, `n = 2k + 1`.
    ExtremalBalanced,
    /// Case 1 ending: `G = K_k ∨ (K_k^c ∪ K_{n-2k})`, `n >= 2k + 2`.
    ExtremalUnbalanced,
    /// Some step failed.
    Failed,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Hamiltonian => "hamiltonian",
            Conclusion::ExtremalBalanced => "extremal, n = 2k+1",
            Conclusion::ExtremalUnbalanced => "extremal, n >= 2k+2",
            Conclusion::Failed => "failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub k: usize,
    pub steps: Vec<Step>,
    pub conclusion: Conclusion,
    /// `min(|{i : |T_i| >= 2}|, 2)` once the segment step has run.
    pub case: Option<usize>,
}

impl ProofTrace {
    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    pub fn failed_step(&self) -> Option<&Step> {
        self.steps.iter().find(|s| !s.passed)
    }

    pub fn step(&self, id: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.id == id)
    }
}

impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

enum Halt {
    Failed,
    Error(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Error(e)
    }
}

struct Tracer {
    steps: Vec<Step>,
    case: Option<usize>,
}

impl Tracer {
    fn step<W>(&mut self, id: &str, description: &str, passed: bool, witness: W) -> std::result::Result<(), Halt>
    where
        W: IntoIterator<Item = (&'static str, String)>,
    {
        self.steps.push(Step {
            id: id.to_string(),
            description: description.to_string(),
            passed,
            witness: witness.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        });
        if passed {
            Ok(())
        } else {
            Err(Halt::Failed)
        }
    }
}

fn seq(items: &[usize]) -> String {
    if items.is_empty() {
        return "-".into();
    }
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// First non-adjacent pair inside `s`.
fn missing_edge(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|u| s.difference(g.neighbors(u)).without(u).first().map(|v| (u, v)))
}

/// Runs the trace. Fails with the violated flag when the hypothesis does not
/// hold, and refuses non-Hamiltonian graphs above the exact longest-cycle
/// limit.
pub fn trace_proof(g: &Graph, k: usize) -> Result<ProofTrace> {
    let report = check_hypothesis(g, k)?;
    if let Some(flag) = report.first_failure() {
        return Err(Error::Hypothesis(flag));
    }
    let mut t = Tracer { steps: Vec::new(), case: None };
    if let Some(c) = find_hamiltonian_cycle(g)? {
        let _ = t.step("hamiltonian", "G is Hamiltonian; nothing to prove", true, [("cycle", c.to_string())]);
        return Ok(ProofTrace { k, steps: t.steps, conclusion: Conclusion::Hamiltonian, case: None });
    }
    if g.order() > LONGEST_CYCLE_MAX_ORDER {
        return Err(Error::OrderTooLarge { n: g.order(), max: LONGEST_CYCLE_MAX_ORDER });
    }
    let conclusion = match run(&mut t, g, k) {
        Ok(c) => c,
        Err(Halt::Failed) => Conclusion::Failed,
        Err(Halt::Error(e)) => {
            let _ = t.step("error", "internal error while tracing", false, [("error", e.to_string())]);
            Conclusion::Failed
        }
    };
    Ok(ProofTrace { k, steps: t.steps, conclusion, case: t.case })
}

fn run(t: &mut Tracer, g: &Graph, k: usize) -> std::result::Result<Conclusion, Halt> {
    let n = g.order();
    let all = g.vertices();
    let delta = g.min_degree()?;
    t.step(
        "order",
        "n >= 2k+1, otherwise delta >= k >= n/2 and G is Hamiltonian",
        n > 2 * k,
        [("n", n.to_string()), ("k", k.to_string()), ("delta", delta.to_string())],
    )?;

    let longest = longest_cycle(g)?;
    let off = all.difference(longest.vertices());
    let Some(x0) = off.first() else {
        t.step("longest-cycle", "a longest cycle C misses some vertex x0", false, [("cycle", longest.to_string())])?;
        unreachable!();
    };

    // Orient C so that u_1, the lowest attachment, is followed by its
    // lower-index neighbour.
    let probe = match menger_fan(g, x0, &longest, k) {
        Ok(f) => f,
        Err(Error::InsufficientPaths { found, .. }) => {
            t.step("menger-fan", "s >= k internally disjoint x0-C paths", false, [("s", found.to_string())])?;
            unreachable!();
        }
        Err(e) => return Err(e.into()),
    };
    let u1 = probe.attachments().into_iter().min().expect("s >= k >= 2");
    let c = longest.oriented_from(u1);
    t.step(
        "longest-cycle",
        "a longest cycle C misses some vertex x0 (lowest index chosen)",
        true,
        [("cycle", c.to_string()), ("length", c.len().to_string()), ("x0", x0.to_string()), ("off", off.to_string())],
    )?;

    let fan = menger_fan(g, x0, &c, k)?;
    let s = fan.len();
    t.step(
        "menger-fan",
        "by Menger, s >= k paths from x0 to C pairwise disjoint except at x0",
        s >= k && fan.validate(g, &c).is_ok(),
        [("s", s.to_string()), ("attachments", seq(&fan.attachments())), ("paths", fan.to_string())],
    )?;

    let t_set = successors_set(&c, &fan)?;
    let fan_k = fan.truncated(k);
    let s_set = successors_set(&c, &fan_k)?;
    t.step(
        "independent-set",
        "T = {x0, u_1^+, .., u_s^+} is independent, else C is not longest; S = {x0, u_1^+, .., u_k^+}",
        t_set.len() == s + 1 && g.is_independent(t_set),
        [("T", t_set.to_string()), ("S", s_set.to_string())],
    )?;

    let (chi, _) = chromatic_number(g)?;
    let (alpha, _) = independence_number(g)?;
    let complement = g.complement();
    let omega_c = clique_number(&complement)?;
    let (chi_c, _) = chromatic_number(&complement)?;
    t.step(
        "equality-chain",
        "n+1 <= chi(G)+alpha(G) = chi(G)+omega(G^c) <= chi(G)+chi(G^c) <= n+1, so chi(G) = n-k, alpha(G) = omega(G^c) = chi(G^c) = k+1, and s = k",
        chi == n - k && alpha == k + 1 && omega_c == k + 1 && chi_c == k + 1 && s == k,
        [
            ("chi", chi.to_string()),
            ("alpha", alpha.to_string()),
            ("omega_c", omega_c.to_string()),
            ("chi_c", chi_c.to_string()),
            ("s", s.to_string()),
        ],
    )?;

    let rest = all.difference(s_set);
    let mut witness = vec![("V-S", rest.to_string())];
    let gap = missing_edge(g, rest);
    if let Some((x, y)) = gap {
        // Distinct colours on V-S except that y reuses x's, one more for S:
        // n-k-1 colours in total.
        let mut colour = vec![0; n];
        for (c, v) in (1..).zip(rest.iter().filter(|&v| v != y)) {
            colour[v] = c;
        }
        colour[y] = colour[x];
        let coloring = Coloring::from_assignment(&colour);
        witness.push(("non-edge", format!("{x}-{y}")));
        witness.push(("proper", coloring.is_proper(g).to_string()));
        witness.push(("colors", coloring.colors_used().to_string()));
    }
    t.step("rest-complete", "G[V(G) - S] is complete, else a proper (n-k-1)-colouring exists", gap.is_none(), witness)?;

    let dec = segments(&c, &fan_k, k)?;
    let big = dec.big_segment_indices();
    let case = big.len().min(2);
    t.case = Some(case);
    t.step(
        "segments",
        "T_i = C[u_i^{++}, u_{i+1}], |T_i| >= 1; case = |{i : |T_i| >= 2}|",
        dec.segments.iter().all(|s| !s.is_empty()),
        [
            ("segments", dec.to_string()),
            ("big", seq(&big.iter().map(|i| i + 1).collect::<Vec<_>>())),
            ("case", case.to_string()),
        ],
    )?;

    match case {
        0 => {
            offcycle_steps(t, g, &c, &fan_k, x0, off, "case0", "")?;
            let joined = s_set.iter().all(|x| rest.is_subset(g.neighbors(x)));
            t.step(
                "case0-join",
                "every vertex of S has degree >= k and only V(G)-S to see, so S is joined to all of V(G)-S",
                joined,
                [("S", s_set.to_string()), ("V-S", rest.to_string())],
            )?;
            let p = ExtremalPartition { a: rest, b: s_set.without(x0), c_part: VertexSet::singleton(x0) };
            conclude(t, g, k, &p, n == 2 * k + 1, "G = K_k join K_{k+1}^c, n = 2k+1")?;
            Ok(Conclusion::ExtremalBalanced)
        }
        1 => {
            let shift = big[0];
            let dec1 = dec.rotated(shift);
            let us = &dec1.attachments;
            let ups = &dec1.successors;
            let ys = &dec1.segments[0][..dec1.segments[0].len() - 1];
            let r = ys.len();
            t.step(
                "case1-frame",
                "renumber so T_1 = y_1 .. y_r u_2 is the long segment",
                r >= 1,
                [("u", seq(us)), ("u+", seq(ups)), ("y", seq(ys)), ("r", r.to_string())],
            )?;
            offcycle_steps(
                t,
                g,
                &c,
                &fan_k,
                x0,
                off,
                "case1",
                " (z u_3 is an edge because G[V(G) - S] is complete; u_3 is u_1 when k = 2)",
            )?;
            t.step(
                "case1-order",
                "V(G) - V(C) = {x0} with a long segment gives n >= 2k+2",
                n >= 2 * k + 2,
                [("n", n.to_string())],
            )?;

            for j in (1..=r).rev() {
                let y = ys[j - 1];
                let to_u1p = g.has_edge(y, ups[0]);
                let to_x0 = g.has_edge(y, x0);
                let to_others: Vec<usize> = ups[1..].iter().copied().filter(|&w| g.has_edge(y, w)).collect();
                let mut witness = vec![
                    ("y", y.to_string()),
                    ("y~u1+", to_u1p.to_string()),
                    ("y~x0", to_x0.to_string()),
                    ("y~ul+", seq(&to_others)),
                ];
                let mut rule_silent = true;
                if j >= 2 {
                    let fired = extend_case1_rotation(g, &c, &fan_k, j)?;
                    rule_silent = fired.is_none();
                    witness.push(("rotation", fired.map_or("absent".into(), |c| c.to_string())));
                }
                t.step(
                    &format!("case1-y{j}"),
                    "y_j u_1^+ in E, x0 y_j not in E, y_j u_l^+ not in E (l >= 2); the rotations at y_j find no longer cycle",
                    to_u1p && !to_x0 && to_others.is_empty() && rule_silent,
                    witness,
                )?;
            }

            let b_part: VertexSet = std::iter::once(x0).chain(ups[1..].iter().copied()).collect();
            let u_set: VertexSet = us.iter().collect();
            let degree_ok = b_part.iter().all(|w| u_set.is_subset(g.neighbors(w)));
            t.step(
                "case1-degree",
                "each w in S - {u_1^+} has degree >= k and sees only u_1..u_k, so w u_s in E for all s",
                degree_ok,
                [("S-u1+", b_part.to_string()), ("u", u_set.to_string())],
            )?;

            let u1p = ups[0];
            let missing: Vec<usize> = us.iter().copied().filter(|&u| !g.has_edge(u1p, u)).collect();
            let mut witness = vec![("u1+", u1p.to_string()), ("missing", seq(&missing))];
            if let Some(&ut) = missing.first() {
                // n-k-1 colours on V-S, u_1^+ takes u_t's, S - {u_1^+} takes y_1's.
                let mut colour = vec![0; n];
                for (i, v) in rest.iter().enumerate() {
                    colour[v] = i;
                }
                colour[u1p] = colour[ut];
                for w in b_part {
                    colour[w] = colour[ys[0]];
                }
                let coloring = Coloring::from_assignment(&colour);
                witness.push(("proper", coloring.is_proper(g).to_string()));
                witness.push(("colors", coloring.colors_used().to_string()));
            }
            t.step(
                "case1-coloring",
                "u_1^+ u_t in E for every t, else colouring V-S distinctly, u_1^+ like u_t and S - {u_1^+} like y_1 uses n-k-1 colours",
                missing.is_empty(),
                witness,
            )?;

            let c_part: VertexSet = std::iter::once(u1p).chain(ys.iter().copied()).collect();
            let p = ExtremalPartition { a: u_set, b: b_part, c_part };
            conclude(t, g, k, &p, n >= 2 * k + 2, "G = K_k join (K_k^c union K_{n-2k}), n >= 2k+2")?;
            Ok(Conclusion::ExtremalUnbalanced)
        }
        _ => {
            let fired = extend_predecessor_chord(g, &c, &fan_k)?;
            t.step(
                "case2-chord",
                "two long segments: their vertices before u_{i+1} lie in the clique G[V(G) - S], and rerouting through that chord lengthens C",
                false,
                [("rule", fired.map_or("absent".into(), |c| c.to_string()))],
            )?;
            unreachable!()
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn offcycle_steps(
    t: &mut Tracer,
    g: &Graph,
    c: &crate::cycles::Cycle,
    fan: &crate::invariants::PathSystem,
    x0: usize,
    off: VertexSet,
    prefix: &str,
    note: &str,
) -> std::result::Result<(), Halt> {
    t.step(
        &format!("{prefix}-offcycle-clique"),
        "alpha(G) = k+1, so G[V(G) - V(C)] is complete",
        g.is_clique(off),
        [("off", off.to_string())],
    )?;
    let mut fired = Vec::new();
    for z in off.without(x0) {
        if let Some(longer) = extend_offcycle(g, c, fan, z)? {
            fired.push(format!("{z}:{longer}"));
        }
    }
    let description =
        format!("V(G) - V(C) = {{x0}}: a second vertex z would give the longer cycle x0 z C[u_j, u_(j-1)] P x0{note}");
    t.step(
        &format!("{prefix}-single-offcycle"),
        &description,
        off == VertexSet::singleton(x0) && fired.is_empty(),
        [("off", off.to_string()), ("longer", if fired.is_empty() { "-".into() } else { fired.join(";") })],
    )
}

fn conclude(
    t: &mut Tracer,
    g: &Graph,
    k: usize,
    p: &ExtremalPartition,
    order_ok: bool,
    description: &str,
) -> std::result::Result<(), Halt> {
    let structure = p.check(g);
    let recognized = recognize_extremal(g).map(|(found, _)| found);
    t.step(
        "conclusion",
        description,
        structure.is_ok() && order_ok && recognized == Some(k),
        [
            ("a", p.a.to_string()),
            ("b", p.b.to_string()),
            ("c", p.c_part.to_string()),
            ("check", structure.err().unwrap_or_else(|| "ok".into()).replace(' ', "_")),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorem::{build_extremal, HypothesisFlag};

    #[test]
    fn balanced_extremal_ends_in_case0() {
        let g = build_extremal(2, 5).unwrap();
        let tr = trace_proof(&g, 2).unwrap();
        assert!(tr.all_passed(), "{tr}");
        assert_eq!(tr.case, Some(0));
        assert_eq!(tr.conclusion, Conclusion::ExtremalBalanced);
        let ids: Vec<&str> = tr.steps.iter().map(|s| s.id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "order",
                "longest-cycle",
                "menger-fan",
                "independent-set",
                "equality-chain",
                "rest-complete",
                "segments",
                "case0-offcycle-clique",
                "case0-single-offcycle",
                "case0-join",
                "conclusion"
            ]
        );
        assert_eq!(tr.step("conclusion").unwrap().witness("c"), Some("4"));
    }

    #[test]
    fn unbalanced_extremal_ends_in_case1() {
        let g = build_extremal(2, 7).unwrap();
        let tr = trace_proof(&g, 2).unwrap();
        assert!(tr.all_passed(), "{tr}");
        assert_eq!(tr.case, Some(1));
        assert_eq!(tr.conclusion, Conclusion::ExtremalUnbalanced);
        assert_eq!(tr.step("case1-frame").unwrap().witness("r"), Some("2"));
        assert!(tr.step("case1-y2").is_some());
        assert!(tr.step("case1-y1").is_some());
        assert!(tr.step("case1-y3").is_none());
    }

    #[test]
    fn larger_extremal_graphs_trace_cleanly() {
        for (k, n) in [(3, 7), (3, 9), (4, 9), (4, 12), (2, 10), (5, 13)] {
            let g = build_extremal(k, n).unwrap();
            let tr = trace_proof(&g, k).unwrap();
            assert!(tr.all_passed(), "k={k} n={n}\n{tr}");
            let expect = if n == 2 * k + 1 { Conclusion::ExtremalBalanced } else { Conclusion::ExtremalUnbalanced };
            assert_eq!(tr.conclusion, expect);
        }
    }

    #[test]
    fn relabelled_extremal_traces_cleanly() {
        let g = build_extremal(3, 8).unwrap().relabel(&[5, 2, 7, 0, 6, 1, 3, 4]).unwrap();
        let tr = trace_proof(&g, 3).unwrap();
        assert!(tr.all_passed(), "{tr}");
    }

    #[test]
    fn hamiltonian_short_circuit() {
        let tr = trace_proof(&Graph::complete(5), 2).unwrap();
        assert_eq!(tr.steps.len(), 1);
        assert_eq!(tr.steps[0].id, "hamiltonian");
        assert_eq!(tr.conclusion, Conclusion::Hamiltonian);
        assert!(tr.to_string().starts_with("hamiltonian\tPASS\t"));
    }

    #[test]
    fn hypothesis_and_size_errors() {
        assert_eq!(trace_proof(&Graph::cycle(6), 2), Err(Error::Hypothesis(HypothesisFlag::ChromaticBound)));
        let big = build_extremal(2, 17).unwrap();
        assert!(matches!(trace_proof(&big, 2), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn text_form_is_one_step_per_line() {
        let tr = trace_proof(&build_extremal(2, 6).unwrap(), 2).unwrap();
        let text = tr.to_string();
        assert_eq!(text.lines().count(), tr.steps.len());
        for line in text.lines() {
            assert_eq!(line.split('\t').count(), 4, "{line}");
        }
    }
}
