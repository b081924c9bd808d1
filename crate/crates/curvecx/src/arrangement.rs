//! The cell structure cut out of the surface by a picture.
//!
//! Nodes are the triangulation vertex, the marked points, and the
//! chord-chord crossings; segments are the pieces of triangulation edges
//! (transparent) and the pieces of chords (curve). A rotation system at
//! every node gives the 2-cells as face-tracing orbits; complementary
//! regions of the curves are unions of cells glued across transparent
//! segments. Bigon faces of the curve arrangement are detected here and
//! described as [`BigonMove`]s for the picture to apply.

use std::collections::HashMap;

use crate::picture::{BigonMove, Picture, Sys};
use crate::surface::EdgeId;
use crate::uf::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegKind {
    /// piece of a triangulation edge; regions extend across these
    Edge(EdgeId),
    /// piece of a strand chord
    Chord { strand: u32, step: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct Seg {
    pub from: usize,
    pub to: usize,
    pub kind: SegKind,
}

#[derive(Debug, Clone, Copy)]
pub struct Crossing {
    pub node: usize,
    pub a_strand: usize,
    pub a_step: usize,
    pub b_strand: usize,
    pub b_step: usize,
    /// +1 when the (first, second) tangent pair is a positive frame in
    /// the orientation fixed by the homology conventions
    pub sign: i8,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    pub segs: Vec<Seg>,
    node_count: usize,
    /// per node: outgoing half-edges in rotation order (one consistent
    /// handedness at every node)
    rot: Vec<Vec<u32>>,
    /// per half-edge: its index within rot[from(h)]
    rot_pos: Vec<u32>,
    pub cells: Vec<Vec<u32>>,
    pub cell_of: Vec<u32>,
    /// per half-edge: position within its cell walk
    walk_pos: Vec<u32>,
    pub region_of_cell: Vec<u32>,
    pub region_count: usize,
    pub crossings: Vec<Crossing>,
    /// picture point of each node (usize::MAX for vertex / crossings)
    point_of_node: Vec<usize>,
    /// per edge: segment ids in order (len = points on edge + 1)
    pub edge_segs: Vec<Vec<u32>>,
}

#[inline]
pub fn twin(h: u32) -> u32 {
    h ^ 1
}

impl Arrangement {
    pub fn from_he(&self, h: u32) -> usize {
        let s = &self.segs[(h >> 1) as usize];
        if h & 1 == 0 {
            s.from
        } else {
            s.to
        }
    }

    pub fn to_he(&self, h: u32) -> usize {
        self.from_he(twin(h))
    }

    pub fn kind(&self, h: u32) -> SegKind {
        self.segs[(h >> 1) as usize].kind
    }

    pub fn is_curve(&self, h: u32) -> bool {
        matches!(self.kind(h), SegKind::Chord { .. })
    }

    /// For a chord half-edge: does it point toward the chord's to-endpoint?
    pub fn towards_to(&self, h: u32) -> bool {
        h & 1 == 0
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn region_of_he(&self, h: u32) -> u32 {
        self.region_of_cell[self.cell_of[h as usize] as usize]
    }

    fn sigma(&self, h: u32) -> u32 {
        let n = self.from_he(h);
        let r = &self.rot[n];
        r[(self.rot_pos[h as usize] as usize + 1) % r.len()]
    }

    /// Face-tracing successor: the next half-edge of the cell of `h`.
    fn phi(&self, h: u32) -> u32 {
        self.sigma(twin(h))
    }

    /// Next curve half-edge along the boundary of the region of `h`:
    /// sweeps the rotation at the head node past the transparent spokes.
    pub fn next_boundary(&self, h: u32) -> u32 {
        let mut k = self.sigma(twin(h));
        while !self.is_curve(k) {
            k = self.sigma(k);
        }
        k
    }

    pub fn build(pic: &Picture) -> Arrangement {
        let tri = pic.tri;
        // nodes: 0 = vertex, then alive points, then crossings
        let mut node_of_point = vec![usize::MAX; pic.points.len()];
        let mut point_of_node = vec![usize::MAX];
        let mut next_node = 1usize;
        for (i, p) in pic.points.iter().enumerate() {
            if p.alive {
                node_of_point[i] = next_node;
                point_of_node.push(i);
                next_node += 1;
            }
        }

        // chords grouped per face
        struct Chord {
            strand: usize,
            step: usize,
            u: usize, // from point
            v: usize, // to point
            crossings: Vec<(usize, usize)>, // (sort key along chord, crossing idx)
            seg_nodes: Vec<usize>,
            seg_ids: Vec<u32>,
        }
        let mut face_chords: Vec<Vec<Chord>> = (0..tri.face_count()).map(|_| Vec::new()).collect();
        for (si, s) in pic.strands.iter().enumerate() {
            let n = s.points.len();
            for k in 0..n {
                face_chords[s.faces[k]].push(Chord {
                    strand: si,
                    step: k,
                    u: s.points[k],
                    v: s.points[(k + 1) % n],
                    crossings: Vec::new(),
                    seg_nodes: Vec::new(),
                    seg_ids: Vec::new(),
                });
            }
        }

        // crossings per face
        let mut crossings: Vec<Crossing> = Vec::new();
        let mut bidx: HashMap<usize, usize> = HashMap::new();
        for f in 0..tri.face_count() {
            let chords = &mut face_chords[f];
            if chords.is_empty() {
                continue;
            }
            // boundary points of face f in the cyclic slot order
            bidx.clear();
            let mut count = 0usize;
            for slot in tri.face(f) {
                let order = &pic.edge_order[slot.edge];
                if slot.forward {
                    for &p in order.iter() {
                        bidx.insert(p, count);
                        count += 1;
                    }
                } else {
                    for &p in order.iter().rev() {
                        bidx.insert(p, count);
                        count += 1;
                    }
                }
            }
            let n = count;
            let cyc = |a: usize, b: usize| (b + n - a) % n;
            let (firsts, seconds): (Vec<usize>, Vec<usize>) = {
                let mut a = Vec::new();
                let mut b = Vec::new();
                for (i, c) in chords.iter().enumerate() {
                    match pic.strands[c.strand].sys {
                        Sys::First => a.push(i),
                        Sys::Second => b.push(i),
                    }
                }
                (a, b)
            };
            for &ia in &firsts {
                for &ib in &seconds {
                    let (ua, va) = (bidx[&chords[ia].u], bidx[&chords[ia].v]);
                    let (ub, vb) = (bidx[&chords[ib].u], bidx[&chords[ib].v]);
                    let pv = cyc(ua, va);
                    let pr = cyc(ua, ub);
                    let ps = cyc(ua, vb);
                    debug_assert!(pv != 0 && pr != 0 && ps != 0 && pr != pv && ps != pv);
                    let r_in = pr < pv;
                    let s_in = ps < pv;
                    if r_in == s_in {
                        continue; // disjoint chords
                    }
                    let sign = if r_in { 1 } else { -1 };
                    let node = next_node;
                    next_node += 1;
                    point_of_node.push(usize::MAX);
                    let idx = crossings.len();
                    crossings.push(Crossing {
                        node,
                        a_strand: chords[ia].strand,
                        a_step: chords[ia].step,
                        b_strand: chords[ib].strand,
                        b_step: chords[ib].step,
                        sign,
                    });
                    // order along each chord by the in-side endpoint of the other
                    let key_a = if r_in { pr } else { ps };
                    let key_b = {
                        let pu = cyc(ub, ua);
                        let pva = cyc(ub, va);
                        let pvb = cyc(ub, vb);
                        if pu < pvb {
                            pu
                        } else {
                            debug_assert!(pva < pvb);
                            pva
                        }
                    };
                    chords[ia].crossings.push((key_a, idx));
                    chords[ib].crossings.push((key_b, idx));
                }
            }
            for c in chords.iter_mut() {
                c.crossings.sort_unstable();
                debug_assert!(c.crossings.windows(2).all(|w| w[0].0 != w[1].0));
            }
            // strands of one system stay pairwise disjoint; interleaved
            // endpoints within a system would mean the picture went bad
            if cfg!(debug_assertions) {
                for group in [&firsts, &seconds] {
                    for (i, &ia) in group.iter().enumerate() {
                        for &ib in &group[i + 1..] {
                            let (ua, va) = (bidx[&chords[ia].u], bidx[&chords[ia].v]);
                            let (ub, vb) = (bidx[&chords[ib].u], bidx[&chords[ib].v]);
                            let pv = cyc(ua, va);
                            let r_in = cyc(ua, ub) < pv;
                            let s_in = cyc(ua, vb) < pv;
                            assert_eq!(r_in, s_in, "same-system chords interleave in face {f}");
                        }
                    }
                }
            }
        }

        // segments
        let mut segs: Vec<Seg> = Vec::new();
        let mut edge_segs: Vec<Vec<u32>> = vec![Vec::new(); tri.edge_count()];
        for e in 0..tri.edge_count() {
            let order = &pic.edge_order[e];
            let mut prev = 0usize; // vertex
            for &p in order {
                let id = segs.len() as u32;
                segs.push(Seg { from: prev, to: node_of_point[p], kind: SegKind::Edge(e) });
                edge_segs[e].push(id);
                prev = node_of_point[p];
            }
            let id = segs.len() as u32;
            segs.push(Seg { from: prev, to: 0, kind: SegKind::Edge(e) });
            edge_segs[e].push(id);
        }
        // chord segments; record chord-end half-edges per (point, side-face)
        // and per-crossing outgoing half-edges along each chord
        let mut chord_out_at_point: Vec<[Option<u32>; 2]> = vec![[None, None]; pic.points.len()];
        // per crossing: outgoing along first system toward (v, u), then second
        let mut cross_out: Vec<[u32; 4]> = vec![[u32::MAX; 4]; crossings.len()];
        for (f, chords) in face_chords.iter_mut().enumerate() {
            for c in chords.iter_mut() {
                c.seg_nodes.push(node_of_point[c.u]);
                for &(_, xi) in &c.crossings {
                    c.seg_nodes.push(crossings[xi].node);
                }
                c.seg_nodes.push(node_of_point[c.v]);
                for w in 0..c.seg_nodes.len() - 1 {
                    let id = segs.len() as u32;
                    segs.push(Seg {
                        from: c.seg_nodes[w],
                        to: c.seg_nodes[w + 1],
                        kind: SegKind::Chord { strand: c.strand as u32, step: c.step as u32 },
                    });
                    c.seg_ids.push(id);
                }
                // which side of the edge does this chord end lie on?
                let side_at = |pt: usize| -> usize {
                    let e = pic.points[pt].edge;
                    usize::from(tri.sides(e).forward.0 != f)
                };
                chord_out_at_point[c.u][side_at(c.u)] = Some(2 * c.seg_ids[0]);
                chord_out_at_point[c.v][side_at(c.v)] =
                    Some(2 * *c.seg_ids.last().unwrap() + 1);
                let first = pic.strands[c.strand].sys == Sys::First;
                for (w, &(_, xi)) in c.crossings.iter().enumerate() {
                    let toward_v = 2 * c.seg_ids[w + 1];
                    let toward_u = 2 * c.seg_ids[w] + 1;
                    let base = if first { 0 } else { 2 };
                    cross_out[xi][base] = toward_v;
                    cross_out[xi][base + 1] = toward_u;
                }
            }
        }

        // rotations (counterclockwise)
        let mut rot: Vec<Vec<u32>> = vec![Vec::new(); next_node];
        // vertex: the link walk runs clockwise, so reverse it
        for stop in tri.vertex_link().iter().rev() {
            let e = stop.end.edge;
            let segs_e = &edge_segs[e];
            let h = if stop.end.head {
                2 * *segs_e.last().unwrap() + 1
            } else {
                2 * segs_e[0]
            };
            rot[0].push(h);
        }
        // points: [edge-forward, forward-face chord, edge-backward, backward-face chord]
        for (pt, p) in pic.points.iter().enumerate() {
            if !p.alive {
                continue;
            }
            let node = node_of_point[pt];
            let e = p.edge;
            let idx = pic.edge_order[e].iter().position(|&q| q == pt).unwrap();
            let fwd_seg = edge_segs[e][idx + 1];
            let bwd_seg = edge_segs[e][idx];
            let out_fwd = 2 * fwd_seg;
            let out_bwd = 2 * bwd_seg + 1;
            let chord_f = chord_out_at_point[pt][0].expect("chord on forward side");
            let chord_b = chord_out_at_point[pt][1].expect("chord on backward side");
            rot[node] = vec![out_fwd, chord_f, out_bwd, chord_b];
        }
        // crossings
        for (xi, x) in crossings.iter().enumerate() {
            let [va, ua, vb, ub] = cross_out[xi];
            debug_assert!(va != u32::MAX && ua != u32::MAX && vb != u32::MAX && ub != u32::MAX);
            rot[x.node] = if x.sign > 0 {
                vec![va, vb, ua, ub]
            } else {
                vec![va, ub, ua, vb]
            };
        }

        let he_count = 2 * segs.len();
        let mut rot_pos = vec![0u32; he_count];
        for r in &rot {
            for (i, &h) in r.iter().enumerate() {
                rot_pos[h as usize] = i as u32;
            }
        }

        let mut arr = Arrangement {
            segs,
            node_count: next_node,
            rot,
            rot_pos,
            cells: Vec::new(),
            cell_of: vec![u32::MAX; he_count],
            walk_pos: vec![0; he_count],
            region_of_cell: Vec::new(),
            region_count: 0,
            crossings,
            point_of_node,
            edge_segs,
        };
        arr.trace_cells();
        arr.compute_regions();
        arr
    }

    fn trace_cells(&mut self) {
        let he_count = 2 * self.segs.len();
        for h0 in 0..he_count as u32 {
            if self.cell_of[h0 as usize] != u32::MAX {
                continue;
            }
            let cell_id = self.cells.len() as u32;
            let mut walk = Vec::new();
            let mut h = h0;
            loop {
                self.cell_of[h as usize] = cell_id;
                self.walk_pos[h as usize] = walk.len() as u32;
                walk.push(h);
                h = self.phi(h);
                if h == h0 {
                    break;
                }
            }
            self.cells.push(walk);
        }
        // closed surface: V - E + F = 2 - 2g
        let v = self.node_count as i64;
        let e = self.segs.len() as i64;
        let f = self.cells.len() as i64;
        assert_eq!(
            v - e + f,
            2 - 2 * self.genus_hint(),
            "cell structure is not a closed genus-g surface"
        );
    }

    fn genus_hint(&self) -> i64 {
        // recover genus from the vertex rotation: |link| = 2E of the triangulation
        let link_len = self.rot[0].len() as i64;
        // E = 6g - 3  =>  g = (E + 3) / 6
        let e = link_len / 2;
        (e + 3) / 6
    }

    fn compute_regions(&mut self) {
        let mut uf = UnionFind::new(self.cells.len());
        for (si, s) in self.segs.iter().enumerate() {
            if matches!(s.kind, SegKind::Edge(_)) {
                let a = self.cell_of[2 * si] as usize;
                let b = self.cell_of[2 * si + 1] as usize;
                uf.union(a, b);
            }
        }
        let mut ids: HashMap<usize, u32> = HashMap::new();
        let mut region_of_cell = vec![0u32; self.cells.len()];
        for c in 0..self.cells.len() {
            let root = uf.find(c);
            let next = ids.len() as u32;
            let id = *ids.entry(root).or_insert(next);
            region_of_cell[c] = id;
        }
        self.region_count = ids.len();
        self.region_of_cell = region_of_cell;
    }

    fn prev_in_cell(&self, h: u32) -> u32 {
        let cell = &self.cells[self.cell_of[h as usize] as usize];
        let pos = self.walk_pos[h as usize] as usize;
        cell[(pos + cell.len() - 1) % cell.len()]
    }

    /// Euler characteristic of the closure of a set of cells, cut along its
    /// curve boundary. `in_set[cell]` selects the cells.
    pub fn chi_of_cells(&self, in_set: &[bool]) -> i64 {
        let mut f = 0i64;
        let mut e = 0i64;
        // corners are identified across glued (transparent) sides
        let mut uf = UnionFind::new(2 * self.segs.len());
        let mut corner_present = vec![false; 2 * self.segs.len()];
        for (ci, cell) in self.cells.iter().enumerate() {
            if !in_set[ci] {
                continue;
            }
            f += 1;
            for &h in cell {
                corner_present[h as usize] = true;
            }
        }
        for (si, s) in self.segs.iter().enumerate() {
            let h = 2 * si as u32;
            let a_in = in_set[self.cell_of[h as usize] as usize];
            let b_in = in_set[self.cell_of[twin(h) as usize] as usize];
            match s.kind {
                SegKind::Edge(_) => {
                    debug_assert_eq!(a_in, b_in, "transparent segment straddles the set");
                    if a_in {
                        e += 1;
                        uf.union(h as usize, self.prev_in_cell(twin(h)) as usize);
                        uf.union(self.prev_in_cell(h) as usize, twin(h) as usize);
                    }
                }
                SegKind::Chord { .. } => {
                    e += i64::from(a_in) + i64::from(b_in);
                }
            }
        }
        let mut v = 0i64;
        let mut seen_root = std::collections::HashSet::new();
        for h in 0..2 * self.segs.len() {
            if corner_present[h] && seen_root.insert(uf.find(h)) {
                v += 1;
            }
        }
        v - e + f
    }

    /// Scans regions in id order for a bigon face of the curve arrangement:
    /// a disk region whose single boundary walk turns at exactly two
    /// distinct crossings. Returns the corresponding smoothing move.
    pub fn find_bigon(&self, pic: &Picture) -> Option<BigonMove> {
        let he_count = 2 * self.segs.len();
        // group curve half-edges by region
        let mut by_region: Vec<Vec<u32>> = vec![Vec::new(); self.region_count];
        for h in 0..he_count as u32 {
            if self.is_curve(h) {
                by_region[self.region_of_he(h) as usize].push(h);
            }
        }
        let mut visited = vec![false; he_count];
        for (r, hes) in by_region.iter().enumerate() {
            if hes.is_empty() {
                continue;
            }
            for &h in hes.iter() {
                visited[h as usize] = false;
            }
            let mut walks: Vec<Vec<u32>> = Vec::new();
            for &h0 in hes.iter() {
                if visited[h0 as usize] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut h = h0;
                loop {
                    visited[h as usize] = true;
                    walk.push(h);
                    h = self.next_boundary(h);
                    if h == h0 {
                        break;
                    }
                }
                walks.push(walk);
            }
            if walks.len() != 1 {
                continue;
            }
            let walk = &walks[0];
            let corner_pos: Vec<usize> = walk
                .iter()
                .enumerate()
                .filter(|(_, &h)| self.point_of_node[self.to_he(h)] == usize::MAX)
                .map(|(i, _)| i)
                .collect();
            if corner_pos.len() != 2 {
                continue;
            }
            let x1 = self.to_he(walk[corner_pos[0]]);
            let x2 = self.to_he(walk[corner_pos[1]]);
            if x1 == x2 {
                continue;
            }
            let mut in_set = vec![false; self.cells.len()];
            for (c, &rc) in self.region_of_cell.iter().enumerate() {
                in_set[c] = rc as usize == r;
            }
            if self.chi_of_cells(&in_set) != 1 {
                continue;
            }
            return Some(self.bigon_move(pic, r as u32, walk, corner_pos[0], corner_pos[1]));
        }
        None
    }

    fn side_slice(&self, walk: &[u32], from: usize, to: usize) -> Vec<u32> {
        // half-edges strictly after position `from`, up to and including `to`
        let n = walk.len();
        let mut out = Vec::new();
        let mut i = (from + 1) % n;
        loop {
            out.push(walk[i]);
            if i == to {
                break;
            }
            i = (i + 1) % n;
        }
        out
    }

    fn bigon_move(
        &self,
        pic: &Picture,
        region: u32,
        walk: &[u32],
        c1: usize,
        c2: usize,
    ) -> BigonMove {
        let side1 = self.side_slice(walk, c1, c2);
        let side2 = self.side_slice(walk, c2, c1);
        let sys_of = |hes: &[u32]| -> Sys {
            let s = match self.kind(hes[0]) {
                SegKind::Chord { strand, .. } => strand as usize,
                _ => unreachable!(),
            };
            pic.strands[s].sys
        };
        let (a_side, b_side) = if sys_of(&side1) == Sys::First {
            debug_assert_eq!(sys_of(&side2), Sys::Second);
            (side1, side2)
        } else {
            debug_assert_eq!(sys_of(&side2), Sys::First);
            (side2, side1)
        };

        let collect = |side: &[u32]| -> (usize, Vec<usize>, Vec<usize>) {
            let mut strand = usize::MAX;
            let mut steps: Vec<usize> = Vec::new();
            let mut interior: Vec<usize> = Vec::new();
            for (i, &h) in side.iter().enumerate() {
                let (s, st) = match self.kind(h) {
                    SegKind::Chord { strand, step } => (strand as usize, step as usize),
                    _ => unreachable!(),
                };
                if strand == usize::MAX {
                    strand = s;
                }
                debug_assert_eq!(strand, s, "bigon side crosses strands");
                if steps.last() != Some(&st) {
                    steps.push(st);
                }
                if i + 1 < side.len() {
                    let p = self.point_of_node[self.to_he(h)];
                    if p != usize::MAX && interior.last() != Some(&p) {
                        interior.push(p);
                    }
                }
            }
            (strand, steps, interior)
        };
        let (a_strand, a_steps, a_interior) = collect(&a_side);
        let (b_strand, b_steps, b_interior) = collect(&b_side);
        let a_dir_along = self.towards_to(a_side[0]);

        let b_faces: Vec<usize> = b_steps.iter().map(|&st| pic.strands[b_strand].faces[st]).collect();
        debug_assert_eq!(b_faces.len(), b_interior.len() + 1);

        let mut b_insert_after = Vec::with_capacity(b_interior.len());
        for &p in &b_interior {
            let e = pic.points[p].edge;
            let idx = pic.edge_order[e].iter().position(|&q| q == p).unwrap();
            let before_seg = self.edge_segs[e][idx];
            let after_seg = self.edge_segs[e][idx + 1];
            let reg = |seg: u32| self.region_of_cell[self.cell_of[(2 * seg) as usize] as usize];
            let bigon_after = reg(after_seg) == region;
            let bigon_before = reg(before_seg) == region;
            debug_assert!(
                bigon_after != bigon_before,
                "bigon must lie on exactly one side of the edge at a boundary point"
            );
            // insert on the side away from the bigon
            b_insert_after.push(bigon_before);
        }

        BigonMove {
            a_strand,
            a_steps,
            a_dir_along,
            a_interior_points: a_interior,
            b_strand,
            b_interior_points: b_interior,
            b_faces,
            b_insert_after,
        }
    }

    /// Left/right regions of a strand with no crossings: (left, right) as
    /// seen along the strand's orientation, in the orientation fixed by
    /// the crossing-sign convention. The cell walks of this structure
    /// carry their cells on the right of each half-edge (checked against
    /// the sign calibration), so the left region is the twin side.
    /// Panics if the strand crosses anything (only meaningful in
    /// crossing-free pictures).
    pub fn strand_sides(&self, strand: usize) -> (u32, u32) {
        let mut left = u32::MAX;
        let mut right = u32::MAX;
        for (si, s) in self.segs.iter().enumerate() {
            if let SegKind::Chord { strand: st, .. } = s.kind {
                if st as usize != strand {
                    continue;
                }
                let l = self.region_of_he(2 * si as u32 + 1);
                let r = self.region_of_he(2 * si as u32);
                if left == u32::MAX {
                    left = l;
                    right = r;
                } else {
                    assert_eq!((left, right), (l, r), "strand sides change along a crossing-free strand");
                }
            }
        }
        assert_ne!(left, u32::MAX, "strand has at least one chord");
        (left, right)
    }

    /// Connected pieces of the sub-surface formed by the given regions.
    pub fn level_pieces(&self, region_in: &[bool]) -> Vec<Piece> {
        let mut cell_in = vec![false; self.cells.len()];
        for (c, &r) in self.region_of_cell.iter().enumerate() {
            cell_in[c] = region_in[r as usize];
        }
        // components over transparent adjacency
        let mut uf = UnionFind::new(self.cells.len());
        for (si, s) in self.segs.iter().enumerate() {
            if matches!(s.kind, SegKind::Edge(_)) {
                let a = self.cell_of[2 * si] as usize;
                let b = self.cell_of[2 * si + 1] as usize;
                if cell_in[a] && cell_in[b] {
                    uf.union(a, b);
                }
            }
        }
        let mut comp_ids: HashMap<usize, usize> = HashMap::new();
        for c in 0..self.cells.len() {
            if cell_in[c] {
                let root = uf.find(c);
                let next = comp_ids.len();
                comp_ids.entry(root).or_insert(next);
            }
        }
        let mut pieces: Vec<Piece> = (0..comp_ids.len())
            .map(|_| Piece { chi: 0, cells: 0, boundary_strands: Vec::new() })
            .collect();
        for c in 0..self.cells.len() {
            if cell_in[c] {
                pieces[comp_ids[&uf.find(c)]].cells += 1;
            }
        }
        // chi per component
        for (root, &id) in &comp_ids {
            let mut in_set = vec![false; self.cells.len()];
            for c in 0..self.cells.len() {
                if cell_in[c] && uf.find(c) == *root {
                    in_set[c] = true;
                }
            }
            pieces[id].chi = self.chi_of_cells(&in_set);
        }
        // boundary walks: each walk follows one full strand in a
        // crossing-free picture
        let he_count = 2 * self.segs.len();
        let mut visited = vec![false; he_count];
        for h0 in 0..he_count as u32 {
            if visited[h0 as usize] || !self.is_curve(h0) {
                continue;
            }
            let cell = self.cell_of[h0 as usize] as usize;
            if !cell_in[cell] {
                continue;
            }
            let id = comp_ids[&uf.find(cell)];
            let strand = match self.kind(h0) {
                SegKind::Chord { strand, .. } => strand as usize,
                _ => unreachable!(),
            };
            let mut h = h0;
            loop {
                visited[h as usize] = true;
                debug_assert!(matches!(self.kind(h), SegKind::Chord { strand: s2, .. } if s2 as usize == strand));
                h = self.next_boundary(h);
                if h == h0 {
                    break;
                }
            }
            pieces[id].boundary_strands.push(strand);
        }
        for p in &mut pieces {
            p.boundary_strands.sort_unstable();
        }
        pieces.sort_by(|a, b| a.boundary_strands.cmp(&b.boundary_strands));
        pieces
    }
}

/// One connected component of a level sub-surface: its Euler characteristic
/// and the strands forming its boundary circles (one circle per entry).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub chi: i64,
    pub cells: usize,
    pub boundary_strands: Vec<usize>,
}

/// Repeatedly smooths bigon faces until none remain. Returns the final
/// arrangement and the number of smoothings applied. Every smoothing must
/// remove exactly two crossings; anything else is a bug.
pub fn reduce_to_minimal_position(pic: &mut Picture) -> (Arrangement, usize) {
    let mut rounds = 0usize;
    let mut prev: Option<usize> = None;
    loop {
        let arr = Arrangement::build(pic);
        if let Some(p) = prev {
            assert_eq!(
                arr.crossing_count() + 2,
                p,
                "bigon smoothing must remove exactly two crossings"
            );
        }
        match arr.find_bigon(pic) {
            None => return (arr, rounds),
            Some(mv) => {
                prev = Some(arr.crossing_count());
                pic.smooth(&mv);
                rounds += 1;
            }
        }
    }
}
