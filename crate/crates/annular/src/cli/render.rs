//! Deterministic SVG rendering of annulus diagrams.
//!
//! The drawing convention matches the diagrams the objects come from:
//! exterior labels run clockwise starting at 12 o'clock, interior labels
//! counter-clockwise, one arrow per mapping step. Exterior-to-exterior arcs
//! bow toward the hole, interior-to-interior arcs bow outward into the
//! annulus, and connected-cycle arrows cross it on straight lines. Fixed
//! points render as small loops. All coordinates print with two decimals,
//! so identical inputs give byte-identical output.

use std::fmt::Write;

use crate::annulus::AnnularPermutation;

/// Layout parameters for one diagram.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub perm: AnnularPermutation,
    /// Canvas side length in pixels.
    pub size: u32,
    pub stroke_width: f64,
    pub font_size: u32,
}

impl RenderSpec {
    pub fn new(perm: AnnularPermutation) -> RenderSpec {
        RenderSpec {
            perm,
            size: 480,
            stroke_width: 1.5,
            font_size: 14,
        }
    }
}

struct Layout {
    cx: f64,
    cy: f64,
    r_ext: f64,
    r_int: f64,
    n: u32,
    m: u32,
}

impl Layout {
    /// Node position: exterior label `i` sits at `90 - 360(i-1)/n` degrees,
    /// interior label `n+i` at `90 + 360(i-1)/m` degrees.
    fn node(&self, x: u32) -> (f64, f64) {
        let (radius, theta) = if x <= self.n {
            let deg = 90.0 - 360.0 * f64::from(x - 1) / f64::from(self.n);
            (self.r_ext, deg.to_radians())
        } else {
            let deg = 90.0 + 360.0 * f64::from(x - self.n - 1) / f64::from(self.m);
            (self.r_int, deg.to_radians())
        };
        (
            self.cx + radius * theta.cos(),
            self.cy - radius * theta.sin(),
        )
    }

    fn label_pos(&self, x: u32) -> (f64, f64) {
        let (px, py) = self.node(x);
        // push exterior labels outward and interior labels inward
        let offset = if x <= self.n { 16.0 } else { -14.0 };
        let dx = px - self.cx;
        let dy = py - self.cy;
        let len = (dx * dx + dy * dy).sqrt().max(1.0);
        (px + dx / len * offset, py + dy / len * offset)
    }
}

pub fn render_svg(spec: &RenderSpec) -> String {
    let perm = &spec.perm;
    let (n, m) = (perm.n(), perm.m());
    let size = f64::from(spec.size);
    let layout = Layout {
        cx: size / 2.0,
        cy: size / 2.0,
        r_ext: size * 0.40,
        r_int: size * 0.16,
        n,
        m,
    };
    let sw = spec.stroke_width;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        spec.size
    );
    let _ = writeln!(
        svg,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>"#
    );
    for radius in [layout.r_ext, layout.r_int] {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="gray" stroke-width="{:.2}"/>"#,
            layout.cx, layout.cy, radius, sw
        );
    }

    for x in 1..=n + m {
        let y = perm.image(x);
        if y == x {
            // fixed point: a small loop just off the node, on the side away
            // from the annulus region
            let (px, py) = layout.node(x);
            let dx = px - layout.cx;
            let dy = py - layout.cy;
            let len = (dx * dx + dy * dy).sqrt().max(1.0);
            let dir = if x <= n { 1.0 } else { -1.0 };
            let r = size * 0.018;
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="black" stroke-width="{:.2}"/>"#,
                px + dx / len * dir * r,
                py + dy / len * dir * r,
                r,
                sw
            );
            continue;
        }
        let (x1, y1) = layout.node(x);
        let (x2, y2) = layout.node(y);
        let both_ext = x <= n && y <= n;
        let both_int = x > n && y > n;
        // trim the end so the arrowhead tip lands on the node
        let (tx, ty) = {
            let dx = x2 - x1;
            let dy = y2 - y1;
            let len = (dx * dx + dy * dy).sqrt().max(1.0);
            (x2 - dx / len * 6.0, y2 - dy / len * 6.0)
        };
        if both_ext || both_int {
            let mx = (x1 + tx) / 2.0;
            let my = (y1 + ty) / 2.0;
            // curvature sign by circle membership: exterior chords bow
            // inward, interior chords bow outward
            let pull = if both_ext { 0.72 } else { 1.55 };
            let qx = layout.cx + (mx - layout.cx) * pull;
            let qy = layout.cy + (my - layout.cy) * pull;
            let _ = writeln!(
                svg,
                r#"<path d="M {x1:.2} {y1:.2} Q {qx:.2} {qy:.2} {tx:.2} {ty:.2}" fill="none" stroke="black" stroke-width="{sw:.2}" marker-end="url(#arrow)"/>"#
            );
        } else {
            let _ = writeln!(
                svg,
                r#"<path d="M {x1:.2} {y1:.2} L {tx:.2} {ty:.2}" fill="none" stroke="black" stroke-width="{sw:.2}" marker-end="url(#arrow)"/>"#
            );
        }
    }

    for x in 1..=n + m {
        let (px, py) = layout.node(x);
        let _ = writeln!(
            svg,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="2.50" fill="black"/>"#
        );
        let (lx, ly) = layout.label_pos(x);
        let _ = writeln!(
            svg,
            r#"<text x="{lx:.2}" y="{ly:.2}" font-size="{}" text-anchor="middle" dominant-baseline="middle" font-family="sans-serif">{x}</text>"#,
            spec.font_size
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_diagram_is_stable() {
        let perm = AnnularPermutation::from_cycle_str(1, 1, "(1,2)").unwrap();
        let spec = RenderSpec::new(perm);
        let svg = render_svg(&spec);
        assert_eq!(svg, render_svg(&spec));
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        // two labels and two crossing arrows drawn as straight lines
        assert_eq!(svg.matches("<text").count(), 2);
        let straight = svg
            .lines()
            .filter(|l| l.contains("marker-end") && l.contains(" L "))
            .count();
        assert_eq!(straight, 2);
    }

    #[test]
    fn worked_example_structure() {
        let perm =
            AnnularPermutation::from_cycle_str(9, 6, "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)")
                .unwrap();
        let svg = render_svg(&RenderSpec::new(perm));
        // 15 labels, one loop for the fixed point 12, 14 mapping arrows
        assert_eq!(svg.matches("<text").count(), 15);
        assert_eq!(svg.matches("marker-end").count(), 14);
        let loops = svg
            .lines()
            .filter(|l| l.starts_with("<circle") && l.contains(r#"fill="none" stroke="black""#))
            .count();
        assert_eq!(loops, 1);
    }
}
