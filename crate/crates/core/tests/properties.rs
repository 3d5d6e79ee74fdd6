mod common;

use proptest::prelude::*;

use common::random_object;
use voxgap::cell::{self, bounds, cell_from, cofaces_voxels, incident, Cell, Direction};
use voxgap::curves::{generate_curve, validate_curve};
use voxgap::gaps::{detect_hubs, g0_closed_form, g1_closed_form, vertex_classification};
use voxgap::incidence::{degree_sum_check, IncidenceStructure};
use voxgap::object::{intersection_cell, is_adjacent};
use voxgap::verify::run_identity_suite;
use voxgap::voxfile::VoxelFile;
use voxgap::{DigitalObject, Voxel};

fn direction(n: usize) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(-1i8..=1, n)
}

fn cell3() -> impl Strategy<Value = Cell> {
    prop::collection::vec(-4i64..=4, 3).prop_map(|c| Cell::from_doubled(c).unwrap())
}

proptest! {
    #[test]
    fn dimension_is_n_minus_theta_squared(
        (x, theta) in (1usize..=5).prop_flat_map(|n| (prop::collection::vec(-50i64..50, n), direction(n)))
    ) {
        let dot: usize = theta.iter().map(|&t| (t * t) as usize).sum();
        let e = cell_from(&x, &Direction::new(theta.clone()).unwrap()).unwrap();
        prop_assert_eq!(e.dimension(), x.len() - dot);
        prop_assert_eq!(Direction::new(theta).unwrap().cell_dimension(), e.dimension());
    }

    #[test]
    fn incidence_is_reflexive_and_symmetric(a in cell3(), b in cell3()) {
        prop_assert!(incident(&a, &a));
        prop_assert_eq!(incident(&a, &b), incident(&b, &a));
    }

    #[test]
    fn bounding_is_irreflexive_and_transitive(a in cell3(), b in cell3(), c in cell3()) {
        prop_assert!(!bounds(&a, &a));
        if bounds(&a, &b) && bounds(&b, &c) {
            prop_assert!(bounds(&a, &c));
        }
    }

    #[test]
    fn block_has_two_to_the_codimension_voxels(e in cell3()) {
        prop_assume!(!e.is_voxel());
        let block = cofaces_voxels(&e).unwrap();
        prop_assert_eq!(block.len(), 1 << (3 - e.dimension()));
        prop_assert!(block.iter().all(|v| v.is_voxel() && bounds(&e, v)));
    }

    #[test]
    fn faces_of_agree_with_bounding(e in cell3()) {
        for i in 0..e.dimension() {
            let faces = cell::faces_of(&e, i).unwrap();
            prop_assert_eq!(faces.len(), cell::scan_face_count(&e, i));
            prop_assert!(faces.iter().all(|f| bounds(f, &e)));
        }
    }

    #[test]
    fn intersection_dimension_counts_equal_axes(
        a in prop::collection::vec(-3i64..3, 3),
        b in prop::collection::vec(-3i64..3, 3),
    ) {
        let (va, vb) = (Voxel::new(a.clone()).unwrap(), Voxel::new(b.clone()).unwrap());
        let shared = intersection_cell(&va, &vb);
        prop_assert_eq!(shared.is_some(), is_adjacent(&va, &vb, 0));
        if let Some(e) = shared {
            let equal = a.iter().zip(&b).filter(|(x, y)| x == y).count();
            prop_assert_eq!(e.dimension(), equal);
            prop_assert!(e.is_subset_of(&va.cell()) && e.is_subset_of(&vb.cell()));
        }
    }

    #[test]
    fn census_partition_and_facet_identity(seed in any::<u64>(), n in 2usize..=4) {
        let c = random_object(n, 20, 4, seed).census();
        for i in 0..n {
            prop_assert_eq!(c.c(i), c.c_free(i) + c.c_non_free(i));
        }
        prop_assert_eq!(c.c(n - 1) + c.c_non_free(n - 1), 2 * n * c.c(n));
    }

    #[test]
    fn g1_formula_on_arbitrary_objects(seed in any::<u64>()) {
        let d = random_object(3, 40, 6, seed);
        let c = d.census();
        prop_assert_eq!(detect_hubs(&d, &c, 1).unwrap().len() as i64, g1_closed_form(&c).unwrap());
    }

    #[test]
    fn hubs_are_free_cells_of_their_dimension(seed in any::<u64>()) {
        let d = random_object(3, 40, 5, seed);
        let c = d.census();
        for i in 0..=1 {
            for h in detect_hubs(&d, &c, i).unwrap() {
                prop_assert_eq!(h.dimension(), i);
                prop_assert!(c.free_cells(i).contains(&h));
            }
        }
    }

    #[test]
    fn vertex_degrees_sum_to_twice_the_edges(seed in any::<u64>()) {
        let c = random_object(3, 30, 5, seed).census();
        let sum: usize = c.cells(0).iter().map(|v| c.b_count(v, 1).unwrap()).sum();
        prop_assert_eq!(sum, 2 * c.c(1));
        let s = IncidenceStructure::from_census(&c, 0, 1).unwrap();
        prop_assert!(degree_sum_check(&s).pass);
    }

    #[test]
    fn voxel_text_round_trip(seed in any::<u64>()) {
        let d = random_object(3, 40, 6, seed);
        let text = VoxelFile::from_object(&d).to_text();
        let back = VoxelFile::parse_text(&text, 3).unwrap();
        prop_assert_eq!(DigitalObject::new(3, back.voxels).unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_curves_satisfy_everything(length in 2usize..=40, seed in any::<u64>()) {
        let d = generate_curve(length, seed, 0).unwrap();
        let check = validate_curve(&d, 0).unwrap();
        prop_assert!(check.is_valid);
        prop_assert_eq!(check.extremes.len(), 2);
        prop_assert_eq!(check.component_count, 1);
        let c = d.census();
        prop_assert_eq!(g0_closed_form(&c).unwrap(), detect_hubs(&d, &c, 0).unwrap().len() as i64);
        prop_assert!(vertex_classification(&d).is_ok());
        let table = run_identity_suite(&d).unwrap();
        prop_assert!(table.all_pass(), "{}", table);
    }
}
