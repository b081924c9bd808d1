//! Embedded pictures of one or two transverse curve systems.
//!
//! A picture records marked points in order along each triangulation edge
//! and, per strand, the cyclic sequence of marked points with the face
//! crossed between consecutive ones. Chords of the same system are always
//! drawn pairwise disjoint inside each face; chords of opposite systems
//! cross exactly when their endpoints interleave on the face boundary.
//! Bigon smoothing reroutes a strand of the first system alongside the
//! second, so the second system keeps its normal position throughout.

use crate::error::{Error, Result};
use crate::normal::NormalMulticurve;
use crate::surface::{EdgeId, FaceId, Triangulation};

/// Which of the two superimposed curve systems a strand belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sys {
    First,
    Second,
}

#[derive(Debug, Clone)]
pub struct PicPoint {
    pub edge: EdgeId,
    pub strand: usize,
    pub alive: bool,
}

/// One closed strand, traversed in its orientation.
#[derive(Debug, Clone)]
pub struct Strand {
    pub sys: Sys,
    /// index of the component in its multicurve's canonical order
    pub component: usize,
    /// marked point ids in traversal order (cyclic)
    pub points: Vec<usize>,
    /// faces[k] is crossed between points[k] and points[(k+1) % n]
    pub faces: Vec<FaceId>,
}

#[derive(Debug, Clone)]
pub struct Picture<'t> {
    pub tri: &'t Triangulation,
    pub points: Vec<PicPoint>,
    /// per edge: alive point ids in order along the reference direction
    pub edge_order: Vec<Vec<usize>>,
    pub strands: Vec<Strand>,
}

impl<'t> Picture<'t> {
    /// Superimposes two multicurves: along every edge the first system's
    /// points come first. Any placement is admissible here; bigon reduction
    /// later removes whatever inessential crossings this choice creates.
    pub fn superimpose(
        tri: &'t Triangulation,
        first: &NormalMulticurve,
        second: &NormalMulticurve,
    ) -> Result<Self> {
        if first.weights().len() != second.weights().len() {
            return Err(Error::TriangulationMismatch(
                first.weights().len(),
                second.weights().len(),
            ));
        }
        if first.weights().len() != tri.edge_count() {
            return Err(Error::TriangulationMismatch(tri.edge_count(), first.weights().len()));
        }
        let e = tri.edge_count();
        let mut pic = Picture {
            tri,
            points: Vec::new(),
            edge_order: vec![Vec::new(); e],
            strands: Vec::new(),
        };
        pic.add_system(first, Sys::First);
        pic.add_system(second, Sys::Second);
        pic.assert_consistent();
        Ok(pic)
    }

    /// A picture of a single multicurve.
    pub fn single(tri: &'t Triangulation, mc: &NormalMulticurve) -> Result<Self> {
        if mc.weights().len() != tri.edge_count() {
            return Err(Error::TriangulationMismatch(tri.edge_count(), mc.weights().len()));
        }
        let mut pic = Picture {
            tri,
            points: Vec::new(),
            edge_order: vec![Vec::new(); tri.edge_count()],
            strands: Vec::new(),
        };
        pic.add_system(mc, Sys::First);
        pic.assert_consistent();
        Ok(pic)
    }

    fn add_system(&mut self, mc: &NormalMulticurve, sys: Sys) {
        let mut created: Vec<Vec<Option<usize>>> = mc
            .weights()
            .iter()
            .map(|&w| vec![None; w as usize])
            .collect();
        for (ci, comp) in mc.components().iter().enumerate() {
            let t = comp.traced();
            let strand_id = self.strands.len();
            let mut pts = Vec::with_capacity(t.points.len());
            for &(e, pos) in &t.points {
                let id = self.points.len();
                self.points.push(PicPoint { edge: e, strand: strand_id, alive: true });
                created[e][pos as usize] = Some(id);
                pts.push(id);
            }
            self.strands.push(Strand {
                sys,
                component: ci,
                points: pts,
                faces: t.faces.clone(),
            });
        }
        // this system's points follow any already-placed ones, in the
        // system's own position order
        for (e, slots) in created.into_iter().enumerate() {
            for id in slots.into_iter() {
                self.edge_order[e].push(id.expect("trace covers every position"));
            }
        }
    }

    /// Builds a picture with explicitly given placement: `layout[e]` lists
    /// `(strand, traversal index)` in order along edge `e`. Used for the
    /// crossing-free union placement of two disjoint multicurves.
    pub fn from_layout(
        tri: &'t Triangulation,
        strand_specs: Vec<(Sys, usize, Vec<(EdgeId, usize)>, Vec<FaceId>)>,
        layout: Vec<Vec<(usize, usize)>>,
    ) -> Self {
        let mut points = Vec::new();
        let mut strands: Vec<Strand> = strand_specs
            .iter()
            .map(|(sys, comp, pts, faces)| Strand {
                sys: *sys,
                component: *comp,
                points: vec![usize::MAX; pts.len()],
                faces: faces.clone(),
            })
            .collect();
        let mut edge_order = vec![Vec::new(); tri.edge_count()];
        for (e, stops) in layout.iter().enumerate() {
            for &(s, k) in stops {
                let id = points.len();
                debug_assert_eq!(strand_specs[s].2[k].0, e);
                points.push(PicPoint { edge: e, strand: s, alive: true });
                strands[s].points[k] = id;
                edge_order[e].push(id);
            }
        }
        let pic = Picture { tri, points, edge_order, strands };
        pic.assert_consistent();
        pic
    }

    pub fn alive_point_count(&self) -> usize {
        self.points.iter().filter(|p| p.alive).count()
    }

    pub fn position_on_edge(&self, point: usize) -> usize {
        let e = self.points[point].edge;
        self.edge_order[e]
            .iter()
            .position(|&q| q == point)
            .expect("alive point listed on its edge")
    }

    pub fn strand_sys(&self, s: usize) -> Sys {
        self.strands[s].sys
    }

    fn assert_consistent(&self) {
        if cfg!(debug_assertions) {
            let mut seen = vec![false; self.points.len()];
            for (e, order) in self.edge_order.iter().enumerate() {
                for &p in order {
                    assert!(self.points[p].alive);
                    assert_eq!(self.points[p].edge, e);
                    assert!(!seen[p]);
                    seen[p] = true;
                }
            }
            for (si, s) in self.strands.iter().enumerate() {
                assert_eq!(s.points.len(), s.faces.len());
                for &p in &s.points {
                    assert!(self.points[p].alive, "strand {si} references dead point");
                    assert_eq!(self.points[p].strand, si);
                }
            }
            let alive = self.points.iter().filter(|p| p.alive).count();
            assert_eq!(alive, seen.iter().filter(|&&b| b).count());
        }
    }

    /// Applies one bigon smoothing: reroutes the first-system arc alongside
    /// the second-system arc, removing the two corner crossings.
    pub fn smooth(&mut self, mv: &BigonMove) {
        let strand_id = mv.a_strand;
        let n = self.strands[strand_id].points.len();

        // New points in walk order (X -> Y) run parallel to the second
        // system's side traversed backwards (X -> Y).
        let b_rev: Vec<usize> = mv.b_interior_points.iter().rev().copied().collect();
        let insert_rev: Vec<bool> = mv.b_insert_after.iter().rev().copied().collect();
        let faces_xy: Vec<FaceId> = mv.b_faces.iter().rev().copied().collect();

        let mut new_pts_xy = Vec::with_capacity(b_rev.len());
        for (&bp, &after) in b_rev.iter().zip(&insert_rev) {
            let e = self.points[bp].edge;
            let id = self.points.len();
            self.points.push(PicPoint { edge: e, strand: strand_id, alive: true });
            let at = self.position_on_edge(bp) + usize::from(after);
            self.edge_order[e].insert(at, id);
            new_pts_xy.push(id);
        }

        // Remove the old interior points of the first-system arc.
        for &p in &mv.a_interior_points {
            let e = self.points[p].edge;
            let at = self.position_on_edge(p);
            self.edge_order[e].remove(at);
            self.points[p].alive = false;
        }

        // Express the replacement in strand order.
        let first_step = mv.a_steps[0];
        let last_step = *mv.a_steps.last().unwrap();
        let (u, interior_strand, new_pts, new_faces): (usize, Vec<usize>, Vec<usize>, Vec<FaceId>) =
            if mv.a_dir_along {
                (
                    self.strands[strand_id].points[first_step],
                    mv.a_interior_points.clone(),
                    new_pts_xy,
                    faces_xy,
                )
            } else {
                (
                    self.strands[strand_id].points[last_step],
                    mv.a_interior_points.iter().rev().copied().collect(),
                    new_pts_xy.into_iter().rev().collect(),
                    faces_xy.into_iter().rev().collect(),
                )
            };

        let strand = &mut self.strands[strand_id];
        let k = interior_strand.len();
        if k == n {
            // the arc wraps the whole strand: both corners lie on one chord
            // and the leftover piece of that chord carries no marked points,
            // so the rerouted strand closes up through that chord's face
            assert!(
                new_pts.len() > 1,
                "rerouted strand would cross the skeleton at most once"
            );
            debug_assert_eq!(new_faces.first(), new_faces.last());
            let mut fcs: Vec<FaceId> = new_faces[1..new_faces.len() - 1].to_vec();
            fcs.push(new_faces[0]);
            strand.points = new_pts;
            strand.faces = fcs;
        } else {
            let r = strand.points.iter().position(|&p| p == u).expect("u on strand");
            strand.points.rotate_left(r);
            strand.faces.rotate_left(r);
            debug_assert_eq!(&strand.points[1..=k], &interior_strand[..]);

            let mut pts = Vec::with_capacity(n + new_pts.len() - k);
            let mut fcs = Vec::with_capacity(n + new_faces.len() - k - 1);
            pts.push(strand.points[0]);
            pts.extend_from_slice(&new_pts);
            pts.extend_from_slice(&strand.points[k + 1..]);
            fcs.extend_from_slice(&new_faces);
            fcs.extend_from_slice(&strand.faces[k + 1..]);
            debug_assert_eq!(pts.len(), fcs.len());
            strand.points = pts;
            strand.faces = fcs;
        }

        self.assert_consistent();
    }
}

/// All data needed to smooth one bigon face of the arrangement.
#[derive(Debug, Clone)]
pub struct BigonMove {
    pub a_strand: usize,
    /// steps of the first-system arc in walk order (X to Y)
    pub a_steps: Vec<usize>,
    /// true when the walk traverses the strand along its orientation
    pub a_dir_along: bool,
    /// marked points strictly between the corners, in walk order
    pub a_interior_points: Vec<usize>,
    pub b_strand: usize,
    /// marked points of the second-system arc in walk order (Y to X)
    pub b_interior_points: Vec<usize>,
    /// faces of the second-system steps in walk order (Y to X); one more
    /// entry than `b_interior_points`
    pub b_faces: Vec<FaceId>,
    /// per `b_interior_points` entry: insert the new parallel point after
    /// (true) or before (false) it in edge order
    pub b_insert_after: Vec<bool>,
}
