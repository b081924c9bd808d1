//! Push-off curves for the handle loops of the standard triangulation.
//!
//! The identified polygon sides are loops through the vertex; pushing the
//! loop of edge `e` off the vertex gives a normal curve crossing exactly
//! the edge ends between the two ends of `e` on one side of the vertex
//! link (the side with fewer crossings). These push-offs realize the
//! symplectic basis used for homology coordinates.

use crate::error::Result;
use crate::homology::homology_class;
use crate::normal::NormalMulticurve;
use crate::surface::{EdgeEnd, EdgeId, Triangulation};

/// Normal weights of the push-off of the loop formed by edge `e`.
pub fn edge_loop_pushoff_weights(tri: &Triangulation, e: EdgeId) -> Vec<u64> {
    let link = tri.vertex_link();
    let n = link.len();
    let head = tri.link_position(EdgeEnd { edge: e, head: true });
    let tail = tri.link_position(EdgeEnd { edge: e, head: false });
    // walk from the head stop to the tail stop, both ways round
    let fwd_len = (tail + n - head) % n - 1;
    let bwd_len = n - 2 - fwd_len;
    let mut weights = vec![0u64; tri.edge_count()];
    let mut at = head;
    let steps = fwd_len.min(bwd_len);
    let dir_fwd = fwd_len <= bwd_len;
    for _ in 0..steps {
        at = if dir_fwd { (at + 1) % n } else { (at + n - 1) % n };
        weights[link[at].end.edge] += 1;
    }
    weights
}

/// The oriented basis curve running along handle edge `2k` (an `a`-loop)
/// or `2k+1` (a `b`-loop), oriented so that the homology coordinate of the
/// `a_k` curve is the `2k`-th unit vector and that of `b_k` the `2k+1`-st.
pub fn basis_curve(tri: &Triangulation, index: usize) -> Result<NormalMulticurve> {
    assert!(index < 2 * tri.genus() as usize);
    let weights = edge_loop_pushoff_weights(tri, index);
    let mut unit = vec![0i64; 2 * tri.genus() as usize];
    unit[index] = 1;
    for sign in [1i64, -1] {
        let mc = NormalMulticurve::canonicalize(tri, &weights, &[sign])?;
        if homology_class(&mc) == unit {
            return Ok(mc);
        }
    }
    panic!("push-off of handle edge {index} does not represent a unit class");
}
