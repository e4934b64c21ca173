use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::rc::Rc;

use crate::automata::{buchi_accepts_up, Automaton, BuchiAutomaton, Builder, State, UpWord};
use crate::error::{Error, Result};
use crate::limits::Limits;

type Reach = Rc<BTreeSet<(State, bool)>>;

/// The `k`-window semantics of a Büchi automaton.
///
/// Caches, for every state `q` and Parikh vector `u` of size `k`, the pairs
/// `(p, visited)` such that some word with Parikh image `u` leads from `q` to
/// `p`, with `visited` telling whether an accepting state was entered after
/// one of the `k` letters. The same table serves the explicit construction of
/// `B_k` and the membership test, so a `KWindow` can be reused across words.
pub struct KWindow<'a> {
    a: &'a Automaton,
    k: usize,
    memo: RefCell<HashMap<(State, Vec<u32>), Reach>>,
}

impl<'a> KWindow<'a> {
    pub fn new(a: &'a BuchiAutomaton, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidWord("window size must be at least 1".into()));
        }
        Ok(KWindow {
            a: a.automaton(),
            k,
            memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Targets of the words with Parikh image `u` read from `q`.
    fn reach(&self, q: State, u: &[u32]) -> Reach {
        if let Some(r) = self.memo.borrow().get(&(q, u.to_vec())) {
            return r.clone();
        }
        let mut out = BTreeSet::new();
        if u.iter().all(|&x| x == 0) {
            out.insert((q, false));
        } else {
            let mut rest = u.to_vec();
            for l in 0..u.len() {
                if u[l] == 0 {
                    continue;
                }
                rest[l] -= 1;
                for &p in self.a.successors(q, l) {
                    let acc = self.a.is_accepting(p);
                    for &(r, vis) in self.reach(p, &rest).iter() {
                        out.insert((r, vis || acc));
                    }
                }
                rest[l] += 1;
            }
        }
        let out = Rc::new(out);
        self.memo.borrow_mut().insert((q, u.to_vec()), out.clone());
        out
    }

    /// Builds the reachable part of `B_k`.
    ///
    /// States are `(q, v)` with `v` the Parikh image of the current partial
    /// window (named `q[v₀,v₁,…]`) and accepting copies `q_α` (named
    /// `q[acc]`) entered when a window completes through an accepting state.
    /// An accepting copy behaves like `(q, 0)`.
    pub fn construct(&self, limits: &Limits) -> Result<BuchiAutomaton> {
        let a = self.a;
        let d = a.alphabet().len();
        #[derive(Clone, PartialEq, Eq, Hash)]
        enum Node {
            Partial(State, Vec<u32>),
            Acc(State),
        }
        let mut b = Builder::new(a.alphabet().clone());
        let mut index: HashMap<Node, State> = HashMap::new();
        let mut queue = VecDeque::new();
        let name = |n: &Node| match n {
            Node::Partial(q, v) => {
                let parts: Vec<String> = v.iter().map(u32::to_string).collect();
                format!("{}[{}]", a.name(*q), parts.join(","))
            }
            Node::Acc(q) => format!("{}[acc]", a.name(*q)),
        };
        let mut intern =
            |n: Node, b: &mut Builder, queue: &mut VecDeque<(Node, State)>| -> Result<State> {
                if let Some(&s) = index.get(&n) {
                    return Ok(s);
                }
                let s = b.add_state(name(&n));
                if matches!(n, Node::Acc(_)) {
                    b.set_accepting(s);
                }
                if b.num_states() > limits.states {
                    return Err(Error::ResourceCap {
                        what: "window automaton states",
                        cap: limits.states,
                    });
                }
                index.insert(n.clone(), s);
                queue.push_back((n, s));
                Ok(s)
            };
        for &q in a.initial() {
            let s = intern(Node::Partial(q, vec![0; d]), &mut b, &mut queue)?;
            b.set_initial(s);
        }
        while let Some((n, from)) = queue.pop_front() {
            let (q, v) = match &n {
                Node::Partial(q, v) => (*q, v.clone()),
                Node::Acc(q) => (*q, vec![0; d]),
            };
            let filled: u32 = v.iter().sum();
            for l in a.alphabet().iter() {
                let mut u = v.clone();
                u[l] += 1;
                if (filled + 1) < self.k as u32 {
                    let to = intern(Node::Partial(q, u), &mut b, &mut queue)?;
                    b.add_transition(from, l, to);
                } else {
                    for &(p, vis) in self.reach(q, &u).iter() {
                        let target = if vis {
                            Node::Acc(p)
                        } else {
                            Node::Partial(p, vec![0; d])
                        };
                        let to = intern(target, &mut b, &mut queue)?;
                        b.add_transition(from, l, to);
                    }
                }
            }
        }
        Ok(BuchiAutomaton::new(b.build()))
    }

    /// `w ∈ J_k⊞(a)`, decided on the product of `B_k` with the positions of
    /// `w` without materializing `B_k`.
    ///
    /// Inside a window the stored vector is the Parikh image of the letters of
    /// `w` read so far in that window, so a product node only needs the state
    /// of `a`, the acceptance bit of the last completed window and the
    /// position. From the first window boundary after the prefix on,
    /// positions repeat with period `lcm(k, |v|)`, which keeps both the
    /// letter and the window phase.
    pub fn accepts(&self, w: &UpWord) -> bool {
        let a = self.a;
        let d = a.alphabet().len();
        let k = self.k;
        // loop back at a window boundary so that a window never straddles
        // the wrap-around
        let u = w.prefix().len().div_ceil(k) * k;
        let period = lcm(k, w.period().len());
        let positions = u + period;
        let next = |i: usize| if i + 1 < positions { i + 1 } else { u };
        let phase = |i: usize| i % k;
        // Parikh image of the window containing position i, up to and including i
        let window_vec = |i: usize| -> Vec<u32> {
            let start = i - phase(i);
            let mut v = vec![0u32; d];
            for j in start..=i {
                v[w.at(j)] += 1;
            }
            v
        };

        // node: (state, accepted-flag, position)
        type Node = (State, bool, usize);
        let succ = |(q, _, i): Node| -> Vec<Node> {
            let j = next(i);
            if phase(i) + 1 < k {
                vec![(q, false, j)]
            } else {
                self.reach(q, &window_vec(i))
                    .iter()
                    .map(|&(p, vis)| (p, vis, j))
                    .collect()
            }
        };
        let starts: Vec<Node> = a.initial().iter().map(|&q| (q, false, 0)).collect();
        has_accepting_lasso(&starts, succ, |n: &Node| n.1)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Whether some node reachable from `starts` is accepting and lies on a cycle.
pub(crate) fn has_accepting_lasso<N, F, A>(starts: &[N], succ: F, accepting: A) -> bool
where
    N: Clone + Eq + std::hash::Hash,
    F: Fn(N) -> Vec<N>,
    A: Fn(&N) -> bool,
{
    let mut ids: HashMap<N, usize> = HashMap::new();
    let mut nodes: Vec<N> = Vec::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    for s in starts {
        if !ids.contains_key(s) {
            ids.insert(s.clone(), nodes.len());
            nodes.push(s.clone());
            edges.push(Vec::new());
            queue.push_back(nodes.len() - 1);
        }
    }
    while let Some(i) = queue.pop_front() {
        for m in succ(nodes[i].clone()) {
            let j = match ids.get(&m) {
                Some(&j) => j,
                None => {
                    ids.insert(m.clone(), nodes.len());
                    nodes.push(m);
                    edges.push(Vec::new());
                    queue.push_back(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            edges[i].push(j);
        }
    }
    // an accepting node is on a cycle iff it shares a strongly connected
    // component with one of its successors
    let comp = scc(&edges);
    (0..nodes.len()).any(|i| accepting(&nodes[i]) && edges[i].iter().any(|&j| comp[j] == comp[i]))
}

/// Tarjan's algorithm, iterative; returns a component id per node.
fn scc(edges: &[Vec<usize>]) -> Vec<usize> {
    let n = edges.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut counter = 0;
    let mut comps = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei < edges[v].len() {
                let w = edges[v][*ei];
                *ei += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let x = stack.pop().expect("tarjan stack");
                        on_stack[x] = false;
                        comp[x] = comps;
                        if x == v {
                            break;
                        }
                    }
                    comps += 1;
                }
            }
        }
    }
    comp
}

/// `B_k` with `L(B_k) = J_k⊞(a)`.
pub fn kwindow_construct(a: &BuchiAutomaton, k: usize, limits: &Limits) -> Result<BuchiAutomaton> {
    KWindow::new(a, k)?.construct(limits)
}

/// `w ∈ J_k⊞(a)`, checked on the explicit `B_k`.
pub fn kwindow_member_up(
    a: &BuchiAutomaton,
    k: usize,
    w: &UpWord,
    limits: &Limits,
) -> Result<bool> {
    Ok(buchi_accepts_up(&kwindow_construct(a, k, limits)?, w))
}
