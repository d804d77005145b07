//! Acyclic matchings on Hasse diagrams.
//!
//! A matching in the Hasse diagram is acyclic when reversing its edges in
//! the downward-directed diagram leaves no directed cycle; these matchings
//! are exactly the pairings of Morse functions, and we identify a Morse
//! function with its matching throughout.
//!
//! Enumeration is backtracking over cover edges in canonical order, branching
//! exclude-then-include, pruning on matching conflicts and acyclicity. Any
//! directed cycle in a modified Hasse diagram alternates between two
//! consecutive dimension levels, so the incremental acyclicity test searches
//! only the two levels of the candidate edge; [`is_acyclic_matching`] runs
//! the unrestricted whole-digraph test and the two are cross-checked in the
//! test suite.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hasse::HasseDiagram;

/// An acyclic matching: a set of cover-edge ids of a fixed Hasse diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct MorseMatching {
    edges: Vec<u32>,
}

impl MorseMatching {
    /// Validates the matching and acyclicity invariants against a diagram.
    pub fn new(h: &HasseDiagram, mut edges: Vec<u32>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        for &e in &edges {
            h.check_edge_id(e)?;
        }
        let mut seen: HashMap<u32, u32> = HashMap::new();
        for &e in &edges {
            let ce = h.cover_edge(e);
            for face in [ce.lower, ce.upper] {
                if let Some(prev) = seen.insert(face, e) {
                    return Err(Error::NotAMatching(prev, e));
                }
            }
        }
        if !acyclic_full(h, &edges) {
            return Err(Error::NotAcyclic);
        }
        Ok(Self { edges })
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<u32>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Self { edges }
    }

    pub fn edge_ids(&self) -> &[u32] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted edge ids as a single line, e.g. `3 7 12`.
    pub fn id_line(&self) -> String {
        self.edges
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human-readable pair list, one `(lower ⊂ upper)` per matched edge.
    pub fn describe(&self, h: &HasseDiagram) -> String {
        self.edges
            .iter()
            .map(|&e| h.describe_edge(e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Face ids untouched by a matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalSet {
    faces: Vec<u32>,
}

impl CriticalSet {
    pub fn face_ids(&self) -> &[u32] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// A discrete Morse function: one nonnegative value per face id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorseFunction {
    values: Vec<u64>,
}

impl MorseFunction {
    /// Wraps explicit values; must cover every face of the diagram.
    pub fn new(h: &HasseDiagram, values: Vec<u64>) -> Result<Self> {
        if values.len() != h.face_count() {
            return Err(Error::InvalidFaceId {
                id: values.len() as u32,
                count: h.face_count(),
            });
        }
        Ok(Self { values })
    }

    /// The function f -> dim f; a Morse function with every face critical.
    pub fn dimension_function(h: &HasseDiagram) -> Self {
        Self {
            values: (0..h.face_count() as u32)
                .map(|id| h.face_dim(id) as u64)
                .collect(),
        }
    }

    pub fn value(&self, face: u32) -> u64 {
        self.values[face as usize]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Which matchings an enumeration yields.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatchMode {
    /// Every acyclic matching, including the empty one.
    All,
    /// Inclusion-maximal acyclic matchings.
    Maximal,
    /// Perfect matchings: every face is matched when the face count is even;
    /// with an odd face count, every face except a single critical vertex.
    /// The odd case matches the convention in which the empty face is added
    /// below the vertices, making the extended diagram perfectly matchable.
    Perfect,
}

// ---------------------------------------------------------------------------
// Whole-digraph acyclicity
// ---------------------------------------------------------------------------

/// Kahn's algorithm on the modified digraph: downward cover arcs, matched
/// arcs reversed.
fn acyclic_full(h: &HasseDiagram, matching: &[u32]) -> bool {
    let n = h.face_count();
    let mut reversed = vec![false; h.edge_count()];
    for &e in matching {
        reversed[e as usize] = true;
    }
    let mut indeg = vec![0u32; n];
    for (id, ce) in h.cover_edges().iter().enumerate() {
        if reversed[id] {
            indeg[ce.upper as usize] += 1;
        } else {
            indeg[ce.lower as usize] += 1;
        }
    }
    let mut queue: Vec<u32> = (0..n as u32).filter(|&f| indeg[f as usize] == 0).collect();
    let mut seen = 0usize;
    while let Some(x) = queue.pop() {
        seen += 1;
        for &e in h.down_edges(x) {
            // arc x -> lower unless reversed
            if !reversed[e as usize] {
                let y = h.cover_edge(e).lower;
                indeg[y as usize] -= 1;
                if indeg[y as usize] == 0 {
                    queue.push(y);
                }
            }
        }
        for &e in h.up_edges(x) {
            if reversed[e as usize] {
                let y = h.cover_edge(e).upper;
                indeg[y as usize] -= 1;
                if indeg[y as usize] == 0 {
                    queue.push(y);
                }
            }
        }
    }
    seen == n
}

/// True iff the edge set is a matching whose reversal leaves the Hasse
/// digraph acyclic. Invalid edge ids are an error.
pub fn is_acyclic_matching(h: &HasseDiagram, edges: &[u32]) -> Result<bool> {
    for &e in edges {
        h.check_edge_id(e)?;
    }
    let mut touched: HashMap<u32, u32> = HashMap::new();
    for &e in edges {
        let ce = h.cover_edge(e);
        for face in [ce.lower, ce.upper] {
            if touched.insert(face, e).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(acyclic_full(h, edges))
}

/// Faces unmatched by the matching, in canonical order.
pub fn critical_faces(h: &HasseDiagram, m: &MorseMatching) -> CriticalSet {
    let mut matched = vec![false; h.face_count()];
    for &e in m.edge_ids() {
        let ce = h.cover_edge(e);
        matched[ce.lower as usize] = true;
        matched[ce.upper as usize] = true;
    }
    CriticalSet {
        faces: (0..h.face_count() as u32)
            .filter(|&f| !matched[f as usize])
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Morse function <-> matching
// ---------------------------------------------------------------------------

/// Builds a Morse function realizing the matching: matched covers invert,
/// all other covers increase. Values come from a linear extension of the
/// modified digraph, smallest face id first among ready faces.
pub fn morse_function_from_matching(h: &HasseDiagram, m: &MorseMatching) -> Result<MorseFunction> {
    // revalidate: the matching may have been built against another diagram
    let m = MorseMatching::new(h, m.edge_ids().to_vec())?;

    let n = h.face_count();
    let mut reversed = vec![false; h.edge_count()];
    for &e in m.edge_ids() {
        reversed[e as usize] = true;
    }
    let mut indeg = vec![0u32; n];
    for (id, ce) in h.cover_edges().iter().enumerate() {
        if reversed[id] {
            indeg[ce.upper as usize] += 1;
        } else {
            indeg[ce.lower as usize] += 1;
        }
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<u32>> = (0..n as u32)
        .filter(|&f| indeg[f as usize] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut values = vec![0u64; n];
    let mut next = n as u64;
    while let Some(std::cmp::Reverse(x)) = ready.pop() {
        next -= 1;
        values[x as usize] = next;
        let mut relax = |y: u32| {
            indeg[y as usize] -= 1;
            if indeg[y as usize] == 0 {
                ready.push(std::cmp::Reverse(y));
            }
        };
        for &e in h.down_edges(x) {
            if !reversed[e as usize] {
                relax(h.cover_edge(e).lower);
            }
        }
        for &e in h.up_edges(x) {
            if reversed[e as usize] {
                relax(h.cover_edge(e).upper);
            }
        }
    }
    debug_assert_eq!(next, 0, "acyclic matching always admits a linear extension");
    Ok(MorseFunction { values })
}

/// Extracts the matching of a Morse function: the cover pairs on which the
/// value decreases with dimension. Validates the local Morse conditions and
/// names the first offending face on failure.
pub fn matching_from_morse_function(h: &HasseDiagram, f: &MorseFunction) -> Result<MorseMatching> {
    if f.values().len() != h.face_count() {
        return Err(Error::InvalidFaceId {
            id: f.values().len() as u32,
            count: h.face_count(),
        });
    }
    let mut edges = Vec::new();
    for face in 0..h.face_count() as u32 {
        let up_inversions: Vec<u32> = h
            .up_edges(face)
            .iter()
            .copied()
            .filter(|&e| f.value(h.cover_edge(e).upper) < f.value(face))
            .collect();
        if up_inversions.len() > 1 {
            return Err(Error::MorseViolation {
                face: h.face(face).to_string(),
                reason: format!(
                    "{} cofaces of smaller value (at most one allowed)",
                    up_inversions.len()
                ),
            });
        }
        let down_inversions = h
            .down_edges(face)
            .iter()
            .filter(|&&e| f.value(h.cover_edge(e).lower) > f.value(face))
            .count();
        if down_inversions > 1 {
            return Err(Error::MorseViolation {
                face: h.face(face).to_string(),
                reason: format!(
                    "{down_inversions} faces of larger value (at most one allowed)"
                ),
            });
        }
        edges.extend(up_inversions);
    }
    edges.sort_unstable();
    edges.dedup();
    // the local conditions force a matching and acyclicity; `new` re-checks
    MorseMatching::new(h, edges)
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct Enumerator<'a> {
    h: &'a HasseDiagram,
    mode: MatchMode,
    /// matched_by[f] = edge currently matching face f
    matched_by: Vec<Option<u32>>,
    /// per face: incident edges not yet decided
    undecided: Vec<u32>,
    chosen: Vec<u32>,
    /// unmatched faces with no undecided incident edge
    critical: usize,
    /// critical faces of positive dimension (fatal in Perfect mode)
    critical_bad: usize,
    allowance: usize,
    // cycle-search scratch
    mark: Vec<u32>,
    epoch: u32,
    stack: Vec<u32>,
}

#[derive(Clone, Copy)]
struct Undo {
    died_lower: bool,
    died_upper: bool,
}

impl<'a> Enumerator<'a> {
    fn new(h: &'a HasseDiagram, mode: MatchMode) -> Self {
        let n = h.face_count();
        let undecided = (0..n as u32)
            .map(|f| (h.up_edges(f).len() + h.down_edges(f).len()) as u32)
            .collect();
        Enumerator {
            h,
            mode,
            matched_by: vec![None; n],
            undecided,
            chosen: Vec::new(),
            critical: 0,
            critical_bad: 0,
            allowance: n % 2,
            mark: vec![0; n],
            epoch: 0,
            stack: Vec::new(),
        }
    }

    /// Does adding edge `e` close a directed cycle? Searches an alternating
    /// path upper ~> lower within the edge's two dimension levels.
    fn creates_cycle(&mut self, e: u32) -> bool {
        let ce = self.h.cover_edge(e);
        let target = ce.lower;
        self.epoch += 1;
        self.stack.clear();
        self.stack.push(ce.upper);
        self.mark[ce.upper as usize] = self.epoch;
        while let Some(x) = self.stack.pop() {
            for &de in self.h.down_edges(x) {
                if de == e {
                    continue;
                }
                let y = self.h.cover_edge(de).lower;
                if self.matched_by[y as usize] == Some(de) {
                    continue; // this arc is reversed, not available downward
                }
                if y == target {
                    return true;
                }
                if let Some(me) = self.matched_by[y as usize] {
                    let up = self.h.cover_edge(me);
                    if up.lower == y {
                        let z = up.upper;
                        if self.mark[z as usize] != self.epoch {
                            self.mark[z as usize] = self.epoch;
                            self.stack.push(z);
                        }
                    }
                }
            }
        }
        false
    }

    fn can_include(&mut self, e: u32) -> bool {
        let ce = self.h.cover_edge(e);
        self.matched_by[ce.lower as usize].is_none()
            && self.matched_by[ce.upper as usize].is_none()
            && !self.creates_cycle(e)
    }

    fn decide(&mut self, e: u32, include: bool) -> Undo {
        let ce = self.h.cover_edge(e);
        let mut undo = Undo {
            died_lower: false,
            died_upper: false,
        };
        if include {
            self.matched_by[ce.lower as usize] = Some(e);
            self.matched_by[ce.upper as usize] = Some(e);
            self.chosen.push(e);
        }
        for (face, died) in [
            (ce.lower, &mut undo.died_lower),
            (ce.upper, &mut undo.died_upper),
        ] {
            self.undecided[face as usize] -= 1;
            if self.undecided[face as usize] == 0 && self.matched_by[face as usize].is_none() {
                *died = true;
                self.critical += 1;
                if self.h.face_dim(face) > 0 {
                    self.critical_bad += 1;
                }
            }
        }
        undo
    }

    fn undo(&mut self, e: u32, include: bool, undo: Undo) {
        let ce = self.h.cover_edge(e);
        for (face, died) in [(ce.lower, undo.died_lower), (ce.upper, undo.died_upper)] {
            if died {
                self.critical -= 1;
                if self.h.face_dim(face) > 0 {
                    self.critical_bad -= 1;
                }
            }
            self.undecided[face as usize] += 1;
        }
        if include {
            self.matched_by[ce.lower as usize] = None;
            self.matched_by[ce.upper as usize] = None;
            self.chosen.pop();
        }
    }

    fn pruned(&self) -> bool {
        matches!(self.mode, MatchMode::Perfect)
            && (self.critical > self.allowance || self.critical_bad > 0)
    }

    fn accept_leaf(&mut self) -> bool {
        match self.mode {
            MatchMode::All => true,
            MatchMode::Perfect => {
                debug_assert_eq!(self.critical, self.allowance);
                true
            }
            MatchMode::Maximal => {
                let chosen = std::mem::take(&mut self.chosen);
                let mut extendable = false;
                let mut next = chosen.iter().peekable();
                for e in 0..self.h.edge_count() as u32 {
                    if next.peek() == Some(&&e) {
                        next.next();
                        continue;
                    }
                    if {
                        let ok = self.can_include(e);
                        ok
                    } {
                        extendable = true;
                        break;
                    }
                }
                self.chosen = chosen;
                !extendable
            }
        }
    }

    /// Explores all completions of the current state, edges `from..` still
    /// undecided, calling `visit` at accepted leaves. `visit` returns false
    /// to abort the walk.
    fn walk(&mut self, from: usize, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if from == self.h.edge_count() {
            if self.accept_leaf() {
                return visit(&self.chosen);
            }
            return true;
        }
        let e = from as u32;
        let undo = self.decide(e, false);
        let mut keep_going = true;
        if !self.pruned() {
            keep_going = self.walk(from + 1, visit);
        }
        self.undo(e, false, undo);
        if !keep_going {
            return false;
        }
        if self.can_include(e) {
            let undo = self.decide(e, true);
            keep_going = self.walk(from + 1, visit);
            self.undo(e, true, undo);
        }
        keep_going
    }

    /// Replays a fixed include/exclude prefix; returns false when the prefix
    /// is inconsistent (conflicting or cyclic include).
    fn replay(&mut self, prefix: &[bool]) -> bool {
        for (i, &include) in prefix.iter().enumerate() {
            let e = i as u32;
            if include {
                if !self.can_include(e) {
                    return false;
                }
                self.decide(e, true);
            } else {
                self.decide(e, false);
                if self.pruned() {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates matchings in canonical order: depth-first over cover edges,
/// exclude branch before include branch, one matching per complete leaf.
pub fn enumerate_matchings(h: &HasseDiagram, mode: MatchMode) -> Vec<MorseMatching> {
    enumerate_matchings_threaded(h, mode, 1)
}

/// Deterministic parallel enumeration: the decision prefix on the first few
/// cover edges partitions the search space; partitions run independently and
/// concatenate in prefix order, so the stream is identical for every
/// `threads` value.
pub fn enumerate_matchings_threaded(
    h: &HasseDiagram,
    mode: MatchMode,
    threads: usize,
) -> Vec<MorseMatching> {
    let threads = threads.max(1);
    if threads == 1 {
        let mut out = Vec::new();
        let mut enumerator = Enumerator::new(h, mode);
        enumerator.walk(0, &mut |edges| {
            out.push(MorseMatching::from_sorted_unchecked(edges.to_vec()));
            true
        });
        return out;
    }

    let prefixes = decision_prefixes(h, mode, threads);
    let chunk = (prefixes.len() + threads - 1) / threads;
    let results: Vec<Vec<MorseMatching>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for part in prefixes.chunks(chunk.max(1)) {
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                for prefix in part {
                    let mut enumerator = Enumerator::new(h, mode);
                    if enumerator.replay(prefix) {
                        enumerator.walk(prefix.len(), &mut |edges| {
                            out.push(MorseMatching::from_sorted_unchecked(edges.to_vec()));
                            true
                        });
                    }
                }
                out
            }));
        }
        handles
            .into_iter()
            .map(|w| w.join().expect("enumeration worker panicked"))
            .collect()
    });
    results.into_iter().flatten().collect()
}

/// Consistent decision prefixes of a fixed depth, in canonical branch order.
fn decision_prefixes(h: &HasseDiagram, mode: MatchMode, threads: usize) -> Vec<Vec<bool>> {
    let mut depth = 0usize;
    while (1usize << depth) < threads * 4 && depth < h.edge_count() {
        depth += 1;
    }
    let mut prefixes = Vec::new();
    let mut enumerator = Enumerator::new(h, mode);
    fn rec(en: &mut Enumerator, depth: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        let e = cur.len() as u32;
        let undo = en.decide(e, false);
        if !en.pruned() {
            cur.push(false);
            rec(en, depth, cur, out);
            cur.pop();
        }
        en.undo(e, false, undo);
        if en.can_include(e) {
            let undo = en.decide(e, true);
            cur.push(true);
            rec(en, depth, cur, out);
            cur.pop();
            en.undo(e, true, undo);
        }
    }
    rec(&mut enumerator, depth, &mut Vec::new(), &mut prefixes);
    prefixes
}

/// Streams matchings to a visitor; the visitor returns false to abort.
pub fn visit_matchings(
    h: &HasseDiagram,
    mode: MatchMode,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) {
    let mut enumerator = Enumerator::new(h, mode);
    enumerator.walk(0, visit);
}

/// Counts matchings of the given mode without materializing them.
pub fn count_matchings(h: &HasseDiagram, mode: MatchMode, threads: usize) -> BigUint {
    let threads = threads.max(1);
    if threads == 1 {
        let mut n = 0u64;
        let mut enumerator = Enumerator::new(h, mode);
        enumerator.walk(0, &mut |_| {
            n += 1;
            true
        });
        return BigUint::from(n);
    }
    let prefixes = decision_prefixes(h, mode, threads);
    let chunk = (prefixes.len() + threads - 1) / threads;
    let totals: Vec<u64> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for part in prefixes.chunks(chunk.max(1)) {
            handles.push(scope.spawn(move || {
                let mut n = 0u64;
                for prefix in part {
                    let mut enumerator = Enumerator::new(h, mode);
                    if enumerator.replay(prefix) {
                        enumerator.walk(prefix.len(), &mut |_| {
                            n += 1;
                            true
                        });
                    }
                }
                n
            }));
        }
        handles
            .into_iter()
            .map(|w| w.join().expect("count worker panicked"))
            .collect()
    });
    totals.into_iter().map(BigUint::from).sum()
}

/// Number of perfect Morse matchings of a complex (the facets of maximal
/// dimension of its Morse complex when the face count is odd: everything
/// matched except one critical vertex; a full cover when it is even).
pub fn count_perfect_morse_matchings(
    h: &HasseDiagram,
    threads: usize,
) -> BigUint {
    count_matchings(h, MatchMode::Perfect, threads)
}

/// Counts of all acyclic matchings grouped by cardinality; index 0 counts
/// the empty matching.
pub fn count_matchings_by_size(h: &HasseDiagram) -> Vec<u64> {
    let mut counts = Vec::new();
    visit_matchings(h, MatchMode::All, &mut |edges| {
        if counts.len() <= edges.len() {
            counts.resize(edges.len() + 1, 0);
        }
        counts[edges.len()] += 1;
        true
    });
    counts
}

// ---------------------------------------------------------------------------
// Collapsibility certificates
// ---------------------------------------------------------------------------

/// Searches for an acyclic matching with exactly one critical face (a
/// collapsibility certificate) by exhaustive elementary-collapse search with
/// memoized dead states. Returns `None` when no such matching exists.
pub fn find_single_critical_matching(
    h: &HasseDiagram,
    state_budget: usize,
) -> Result<Option<MorseMatching>> {
    let n = h.face_count();
    if n == 1 {
        return Ok(Some(MorseMatching::from_sorted_unchecked(Vec::new())));
    }
    if n % 2 == 0 {
        // one critical face has the parity of the face count
        return Ok(None);
    }

    let mut alive = vec![true; n];
    let mut cover_count: Vec<u32> = (0..n as u32)
        .map(|f| h.up_edges(f).len() as u32)
        .collect();
    let mut pairs: Vec<u32> = Vec::new();
    let mut failed: std::collections::HashSet<Vec<u64>> = std::collections::HashSet::new();

    fn key(alive: &[bool]) -> Vec<u64> {
        let mut words = vec![0u64; (alive.len() + 63) / 64];
        for (i, &a) in alive.iter().enumerate() {
            if a {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        words
    }

    fn search(
        h: &HasseDiagram,
        alive: &mut Vec<bool>,
        cover_count: &mut Vec<u32>,
        pairs: &mut Vec<u32>,
        failed: &mut std::collections::HashSet<Vec<u64>>,
        remaining: usize,
        budget: usize,
    ) -> Result<bool> {
        if remaining == 1 {
            return Ok(true);
        }
        let free: Vec<u32> = (0..alive.len() as u32)
            .filter(|&f| alive[f as usize] && cover_count[f as usize] == 1)
            .collect();
        for sigma in free {
            if !alive[sigma as usize] || cover_count[sigma as usize] != 1 {
                continue; // consumed by an earlier branch of this loop
            }
            let tau = h
                .up_edges(sigma)
                .iter()
                .map(|&e| h.cover_edge(e).upper)
                .find(|&t| alive[t as usize])
                .expect("cover count says one alive coface");
            let edge = h
                .edge_id(sigma, tau)
                .expect("cover pair has an edge id");

            let mut touched = Vec::new();
            for face in [sigma, tau] {
                alive[face as usize] = false;
                for &e in h.down_edges(face) {
                    let below = h.cover_edge(e).lower;
                    if alive[below as usize] {
                        cover_count[below as usize] -= 1;
                        touched.push(below);
                    }
                }
            }
            pairs.push(edge);

            if search(h, alive, cover_count, pairs, failed, remaining - 2, budget)? {
                return Ok(true);
            }

            pairs.pop();
            for &below in touched.iter().rev() {
                cover_count[below as usize] += 1;
            }
            alive[sigma as usize] = true;
            alive[tau as usize] = true;
        }
        if failed.len() >= budget {
            return Err(Error::CollapseBudget(failed.len()));
        }
        failed.insert(key(alive));
        Ok(false)
    }

    let found = search(
        h,
        &mut alive,
        &mut cover_count,
        &mut pairs,
        &mut failed,
        n,
        state_budget,
    )?;
    if found {
        pairs.sort_unstable();
        Ok(Some(MorseMatching::from_sorted_unchecked(pairs)))
    } else {
        Ok(None)
    }
}
