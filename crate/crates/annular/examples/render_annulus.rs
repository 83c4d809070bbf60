//! Renders the worked (9,6)-annulus permutation to an SVG file.
//!
//! Run with: cargo run --example render_annulus
//! The diagram lands in target/annulus_9_6.svg.

use annular::annulus::AnnularPermutation;
use annular::cli::{render_svg, RenderSpec};

fn main() {
    let perm = AnnularPermutation::from_cycle_str(9, 6, "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)")
        .unwrap();
    assert!(perm.is_connected_anc());
    println!("rendering {perm}");
    let profile = perm.profile().unwrap();
    println!("profile: {profile}");

    let svg = render_svg(&RenderSpec::new(perm));
    let path = "target/annulus_9_6.svg";
    std::fs::write(path, svg).unwrap();
    println!("wrote {path}");
}
