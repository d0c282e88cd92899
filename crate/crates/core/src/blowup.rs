//! Quadratic blow-ups of 1-forms and the reduction-of-singularities loop.
//!
//! The two standard charts of the blow-up at the origin are
//! chart 1: (x, t) with y = x·t, and chart 2: (s, y) with x = s·y; the
//! exceptional divisor is {x = 0}, respectively {y = 0}. Pullbacks strip the
//! maximal power of the exceptional coordinate and record it, so chart forms
//! are primitive. Reduction blows up every non-simple singular point until
//! only simple or regular points remain, with a depth bound as a safety net.

use std::fmt;
use std::sync::Arc;


use crate::algebraic::CBox;
use crate::classify::{classify_singularity, ClassTag, MultiplierField, SingularityClass};
use crate::error::BlowupError;
use crate::forms::HoloOneForm;
use crate::nf::{NfElem, NumberField};
use crate::poly::Poly2;
use crate::scalar::{Coeff, GaussianRational, Ring};
use crate::upoly::UPoly;

/// Which standard chart a form lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Chart {
    /// (x, t), y = x·t, divisor {x = 0}.
    XT,
    /// (s, y), x = s·y, divisor {y = 0}.
    SY,
}

impl Chart {
    /// Index of the exceptional coordinate in this chart.
    pub fn exceptional_var(self) -> usize {
        match self {
            Chart::XT => 0,
            Chart::SY => 1,
        }
    }

    /// Index of the coordinate running along the divisor.
    pub fn divisor_param_var(self) -> usize {
        1 - self.exceptional_var()
    }
}

/// A pulled-back 1-form in one blow-up chart, with the stripped content.
#[derive(Clone, Debug)]
pub struct ChartForm<F: Coeff = GaussianRational> {
    pub form: HoloOneForm<F>,
    pub chart: Chart,
    /// The monomial power of the exceptional coordinate that was stripped.
    pub content_removed: Poly2<F>,
}

/// Blow up a form singular at the origin; returns both chart forms.
pub fn blowup_at_origin<F: Coeff>(
    f: &HoloOneForm<F>,
) -> Result<(ChartForm<F>, ChartForm<F>), BlowupError> {
    if !f.singular_at_origin() {
        return Err(BlowupError::RegularCenter);
    }
    Ok((chart_pullback(f, Chart::XT), chart_pullback(f, Chart::SY)))
}

/// Raw pullback in one chart before content stripping.
fn raw_pullback<F: Coeff>(f: &HoloOneForm<F>, chart: Chart) -> HoloOneForm<F> {
    let one = f
        .a
        .terms()
        .next()
        .or_else(|| f.b.terms().next())
        .map(|(_, c)| c.one_like())
        .expect("nonzero form");
    match chart {
        Chart::XT => {
            // y := x·t; dy = t dx + x dt
            let a_sub = f.a.subst_monomial(1, &one, [1, 1]);
            let b_sub = f.b.subst_monomial(1, &one, [1, 1]);
            let t = Poly2::var(1, one.clone());
            let x = Poly2::var(0, one);
            let new_a = a_sub.add(&t.mul(&b_sub));
            let new_b = x.mul(&b_sub);
            HoloOneForm::new(new_a, new_b).expect("pullback of a nonzero form")
        }
        Chart::SY => {
            // x := s·y; dx = y ds + s dy
            let a_sub = f.a.subst_monomial(0, &one, [1, 1]);
            let b_sub = f.b.subst_monomial(0, &one, [1, 1]);
            let s = Poly2::var(0, one.clone());
            let y = Poly2::var(1, one);
            let new_a = y.mul(&a_sub);
            let new_b = s.mul(&a_sub).add(&b_sub);
            HoloOneForm::new(new_a, new_b).expect("pullback of a nonzero form")
        }
    }
}

fn chart_pullback<F: Coeff>(f: &HoloOneForm<F>, chart: Chart) -> ChartForm<F> {
    let raw = raw_pullback(f, chart);
    let exc = chart.exceptional_var();
    let k = raw
        .a
        .var_multiplicity(exc)
        .min(raw.b.var_multiplicity(exc));
    let one = raw
        .a
        .terms()
        .next()
        .or_else(|| raw.b.terms().next())
        .map(|(_, c)| c.one_like())
        .expect("nonzero form");
    let mut exps = [0u32; 2];
    exps[exc] = k;
    let content = Poly2::monomial(one, exps);
    let form = HoloOneForm::new(
        raw.a.div_var_power(exc, k),
        raw.b.div_var_power(exc, k),
    )
    .expect("nonzero after stripping");
    ChartForm {
        form,
        chart,
        content_removed: content,
    }
}

/// Exposed for property tests: the pullback before stripping.
pub fn raw_chart_pullback<F: Coeff>(f: &HoloOneForm<F>, chart: Chart) -> HoloOneForm<F> {
    raw_pullback(f, chart)
}

/// The exceptional divisor of this chart is an integral curve of the form.
pub fn divisor_invariance<F: Coeff>(c: &ChartForm<F>) -> bool {
    match c.chart {
        // {x=0} is invariant iff ω(∂t)|_{x=0} = 0 iff x | B
        Chart::XT => c.form.b.divisible_by_var(0),
        // {y=0} is invariant iff ω(∂s)|_{y=0} = 0 iff y | A
        Chart::SY => c.form.a.divisible_by_var(1),
    }
}

/// A singular point on the exceptional divisor, as an exact root of the
/// restriction of the coefficient gcd to the divisor.
#[derive(Clone, Debug)]
pub enum DivisorRoot<F: Coeff = GaussianRational> {
    InField(F),
    Extension {
        minpoly: UPoly<GaussianRational>,
        root_box: CBox,
    },
}

impl<F: Coeff> fmt::Display for DivisorRoot<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorRoot::InField(v) => write!(f, "{}", v),
            DivisorRoot::Extension { minpoly, root_box } => {
                let mid = root_box.mid_f64();
                write!(f, "root({}; near {:.6}{:+.6}i)", minpoly, mid.re, mid.im)
            }
        }
    }
}

/// Common zeros of both coefficients along the divisor (parametrized by the
/// chart's divisor coordinate). Exact ℚ(i) roots are returned in the field;
/// irreducible factors of higher degree become symbolic extension roots.
pub fn singular_points_on_divisor<F: ReduceField>(
    c: &ChartForm<F>,
) -> Result<Vec<DivisorRoot<F>>, BlowupError> {
    let exc = c.chart.exceptional_var();
    let param = c.chart.divisor_param_var();
    let ra = restrict(&c.form.a, exc, param);
    let rb = restrict(&c.form.b, exc, param);
    if ra.is_zero() && rb.is_zero() {
        return Err(BlowupError::ContentNotStripped);
    }
    let g = ra.gcd(&rb);
    if g.is_constant() {
        return Ok(Vec::new());
    }
    F::divisor_roots(&g)
}

fn restrict<F: Coeff>(p: &Poly2<F>, set_zero_var: usize, keep_var: usize) -> UPoly<F> {
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        if e.0[set_zero_var] == 0 {
            terms.push((e.0[keep_var], c.clone()));
        }
    }
    UPoly::from_sparse(terms)
}

/// Fields over which the reduction loop can run.
pub trait ReduceField: MultiplierField {
    /// Exact roots of a squarefree-able univariate polynomial over the field,
    /// split into in-field roots and symbolic extension roots.
    fn divisor_roots(p: &UPoly<Self>) -> Result<Vec<DivisorRoot<Self>>, BlowupError>;
    /// Wrap a form over this field into the heterogeneous germ type.
    fn wrap_germ(f: HoloOneForm<Self>) -> Germ;
    /// Recenter at a symbolic extension root of the divisor parameter.
    fn extension_germ(
        f: &HoloOneForm<Self>,
        param_var: usize,
        minpoly: &UPoly<GaussianRational>,
        root_box: &CBox,
    ) -> Result<Germ, BlowupError>;
    fn describe(v: &Self) -> String;
}

/// A local germ over whichever field the center needs.
#[derive(Clone, Debug)]
pub enum Germ {
    Base(HoloOneForm<GaussianRational>),
    Ext(HoloOneForm<NfElem>),
}

impl ReduceField for GaussianRational {
    fn divisor_roots(p: &UPoly<Self>) -> Result<Vec<DivisorRoot<Self>>, BlowupError> {
        let roots = crate::roots::gaussian_roots(p)?;
        Ok(roots)
    }

    fn wrap_germ(f: HoloOneForm<Self>) -> Germ {
        Germ::Base(f)
    }

    fn extension_germ(
        f: &HoloOneForm<Self>,
        param_var: usize,
        minpoly: &UPoly<GaussianRational>,
        root_box: &CBox,
    ) -> Result<Germ, BlowupError> {
        let field = NumberField::new(minpoly.clone(), root_box.clone());
        let generator = NfElem::generator(Arc::clone(&field));
        let lifted = f.map_coeffs(|c| NfElem::constant(Arc::clone(&field), c.clone()));
        let a = lifted.a.shift(param_var, &generator);
        let b = lifted.b.shift(param_var, &generator);
        Ok(Germ::Ext(HoloOneForm::new(a, b).expect("nonzero form")))
    }

    fn describe(v: &Self) -> String {
        v.to_string()
    }
}

impl ReduceField for NfElem {
    fn divisor_roots(p: &UPoly<Self>) -> Result<Vec<DivisorRoot<Self>>, BlowupError> {
        crate::roots::extension_roots(p)
    }

    fn wrap_germ(f: HoloOneForm<Self>) -> Germ {
        Germ::Ext(f)
    }

    fn extension_germ(
        _f: &HoloOneForm<Self>,
        _param_var: usize,
        _minpoly: &UPoly<GaussianRational>,
        _root_box: &CBox,
    ) -> Result<Germ, BlowupError> {
        Err(BlowupError::TowerTooDeep)
    }

    fn describe(v: &Self) -> String {
        format!("{} in {}", v, v.field().describe())
    }
}

/// One irreducible component of the exceptional divisor.
#[derive(Clone, Debug)]
pub struct DivisorComponent {
    pub id: usize,
    pub invariant: bool,
    /// Node whose blow-up created this component; its two chart forms are
    /// the component's standard charts.
    pub created_by_node: usize,
}

/// Local axis along which a divisor component passes through a node's center.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocalAxis {
    /// The component is {x = 0} in the node's local coordinates.
    XIsZero,
    /// The component is {y = 0} in the node's local coordinates.
    YIsZero,
}

/// How a node's center arose.
#[derive(Clone, Debug)]
pub enum CenterKind {
    /// The original germ at the origin.
    Root,
    /// Finite point of the new divisor in chart 1, at parameter t = value.
    ChartPoint { parent: usize, param: String },
    /// Origin of chart 2 (the direction missed by chart 1).
    ChartCorner { parent: usize },
}

/// One infinitely-near point of the reduction.
#[derive(Debug)]
pub struct TreeNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    pub center: CenterKind,
    pub class: SingularityClass,
    pub germ: Germ,
    /// Divisor components through this center, with their local axes.
    pub on_components: Vec<(usize, LocalAxis)>,
    /// Set when the node was blown up.
    pub expanded: bool,
    pub children: Vec<usize>,
}

/// The blow-up tree with per-node data and divisor bookkeeping.
#[derive(Debug)]
pub struct ReductionTree {
    pub nodes: Vec<TreeNode>,
    pub components: Vec<DivisorComponent>,
    /// Unordered pairs of component ids meeting at a corner.
    pub adjacency: Vec<(usize, usize)>,
    pub max_depth_reached: usize,
}

impl ReductionTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    /// Nodes that were not blown up: the terminal singular/regular points.
    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| !n.expanded)
    }

    pub fn is_dicritical(&self) -> bool {
        self.components.iter().any(|c| !c.invariant)
    }

    pub fn all_leaves_reduced(&self) -> bool {
        self.leaves()
            .all(|n| matches!(n.class.tag, ClassTag::Regular) || n.class.tag.is_simple())
    }
}

/// Reduce the singularities of a primitive form by repeated blow-ups.
pub fn seidenberg_reduce(
    f: &HoloOneForm<GaussianRational>,
    max_depth: usize,
) -> Result<ReductionTree, BlowupError> {
    let (prim, _) = f.primitive_part();
    let zero = GaussianRational::zero();
    let class = classify_singularity(&prim, (&zero, &zero));
    let mut tree = ReductionTree {
        nodes: vec![TreeNode {
            id: 0,
            parent: None,
            depth: 0,
            center: CenterKind::Root,
            class,
            germ: Germ::Base(prim.clone()),
            on_components: Vec::new(),
            expanded: false,
            children: Vec::new(),
        }],
        components: Vec::new(),
        adjacency: Vec::new(),
        max_depth_reached: 0,
    };
    let result = expand_node(&mut tree, 0, max_depth);
    match result {
        Ok(()) => Ok(tree),
        Err(BlowupError::DepthExceeded { max_depth, .. }) => Err(BlowupError::DepthExceeded {
            max_depth,
            partial: Box::new(tree),
        }),
        Err(e) => Err(e),
    }
}

fn expand_node(tree: &mut ReductionTree, node_id: usize, max_depth: usize) -> Result<(), BlowupError> {
    let needs_blowup = matches!(tree.nodes[node_id].class.tag, ClassTag::NonSimple);
    if !needs_blowup {
        return Ok(());
    }
    if tree.nodes[node_id].depth + 1 > max_depth {
        return Err(BlowupError::DepthExceeded {
            max_depth,
            partial: Box::new(ReductionTree {
                nodes: Vec::new(),
                components: Vec::new(),
                adjacency: Vec::new(),
                max_depth_reached: tree.max_depth_reached,
            }),
        });
    }
    let germ = tree.nodes[node_id].germ.clone();
    match germ {
        Germ::Base(form) => expand_typed(tree, node_id, &form, max_depth),
        Germ::Ext(form) => expand_typed(tree, node_id, &form, max_depth),
    }
}

fn expand_typed<F: ReduceField>(
    tree: &mut ReductionTree,
    node_id: usize,
    form: &HoloOneForm<F>,
    max_depth: usize,
) -> Result<(), BlowupError> {
    let (cf1, cf2) = blowup_at_origin(form)?;
    let inv1 = divisor_invariance(&cf1);
    let inv2 = divisor_invariance(&cf2);
    debug_assert_eq!(inv1, inv2, "invariance must agree across charts");
    let comp_id = tree.components.len();
    tree.components.push(DivisorComponent {
        id: comp_id,
        invariant: inv1,
        created_by_node: node_id,
    });
    // the new component meets every component through the blown-up center;
    // those components are separated from one another by this blow-up
    let parent_comps = tree.nodes[node_id].on_components.clone();
    for (cid, _) in &parent_comps {
        tree.adjacency.push((*cid.min(&comp_id), *cid.max(&comp_id)));
    }
    if parent_comps.len() == 2 {
        let a = parent_comps[0].0;
        let b = parent_comps[1].0;
        tree.adjacency
            .retain(|&(x, y)| !(x == a.min(b) && y == a.max(b)));
    }
    tree.nodes[node_id].expanded = true;

    // children at finite points of the divisor in chart 1
    let param1 = cf1.chart.divisor_param_var();
    let roots = singular_points_on_divisor(&cf1)?;

    // the parent's {y=0}-component (if any) has strict transform {t=0}
    let parent_y_comp = parent_comps
        .iter()
        .find(|(_, ax)| *ax == LocalAxis::YIsZero)
        .map(|(cid, _)| *cid);
    let parent_x_comp = parent_comps
        .iter()
        .find(|(_, ax)| *ax == LocalAxis::XIsZero)
        .map(|(cid, _)| *cid);

    for root in roots {
        let (child_germ, param_desc, at_t_zero) = match &root {
            DivisorRoot::InField(v) => {
                let a = cf1.form.a.shift(param1, v);
                let b = cf1.form.b.shift(param1, v);
                (
                    F::wrap_germ(HoloOneForm::new(a, b).expect("nonzero form")),
                    F::describe(v),
                    v.is_zero(),
                )
            }
            DivisorRoot::Extension { minpoly, root_box } => (
                F::extension_germ(&cf1.form, param1, minpoly, root_box)?,
                format!("{}", root),
                false,
            ),
        };
        let mut on_components = vec![(comp_id, LocalAxis::XIsZero)];
        if at_t_zero {
            if let Some(cid) = parent_y_comp {
                on_components.push((cid, LocalAxis::YIsZero));
            }
        }
        push_child(
            tree,
            node_id,
            child_germ,
            CenterKind::ChartPoint {
                parent: node_id,
                param: param_desc,
            },
            on_components,
            max_depth,
        )?;
    }

    // corner: the origin of chart 2, covered only there
    if cf2.form.singular_at_origin() {
        let mut on_components = vec![(comp_id, LocalAxis::YIsZero)];
        if let Some(cid) = parent_x_comp {
            on_components.push((cid, LocalAxis::XIsZero));
        }
        push_child(
            tree,
            node_id,
            F::wrap_germ(cf2.form.clone()),
            CenterKind::ChartCorner { parent: node_id },
            on_components,
            max_depth,
        )?;
    }
    Ok(())
}

fn push_child(
    tree: &mut ReductionTree,
    parent: usize,
    germ: Germ,
    center: CenterKind,
    on_components: Vec<(usize, LocalAxis)>,
    max_depth: usize,
) -> Result<(), BlowupError> {
    let id = tree.nodes.len();
    let depth = tree.nodes[parent].depth + 1;
    let class = match &germ {
        Germ::Base(f) => {
            let z = GaussianRational::zero();
            classify_singularity(f, (&z, &z))
        }
        Germ::Ext(f) => {
            let z = zero_like_of(f);
            classify_singularity(f, (&z, &z))
        }
    };
    tree.nodes.push(TreeNode {
        id,
        parent: Some(parent),
        depth,
        center,
        class,
        germ,
        on_components,
        expanded: false,
        children: Vec::new(),
    });
    tree.nodes[parent].children.push(id);
    tree.max_depth_reached = tree.max_depth_reached.max(depth);
    expand_node(tree, id, max_depth)
}

fn zero_like_of(f: &HoloOneForm<NfElem>) -> NfElem {
    f.a.terms()
        .next()
        .or_else(|| f.b.terms().next())
        .map(|(_, c)| c.zero_like())
        .expect("nonzero form")
}

pub const DEFAULT_MAX_DEPTH: usize = 20;
