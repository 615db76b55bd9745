#include "phm/group.hpp"

namespace phm {

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be at least 1");
  GroupTable g;
  g.order = n;
  g.mul.resize(static_cast<size_t>(n) * n);
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
    g.names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a)));
  }
  g.identity = 0;
  return g;
}

GroupTable GroupTable::from_table(int order, std::vector<int> mul) {
  GroupTable g;
  g.order = order;
  g.mul = std::move(mul);
  if (static_cast<int>(g.mul.size()) != order * order) throw ShapeError("group table size mismatch");
  for (const int v : g.mul) {
    if (v < 0 || v >= order) throw ShapeError("group table entry out of range");
  }
  g.identity = 0;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) {
      if (g.op(e, a) != a || g.op(a, e) != a) ok = false;
    }
    if (ok) {
      g.identity = e;
      break;
    }
  }
  g.inverse.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) {
        g.inverse[a] = b;
        break;
      }
    }
  }
  for (int a = 0; a < order; ++a) g.names.push_back("g" + std::to_string(a));
  return g;
}

Report check_group(const GroupTable& g) {
  Report rep;
  auto name = [&](int a) {
    return a < static_cast<int>(g.names.size()) ? g.names[a] : std::to_string(a);
  };

  std::optional<std::string> assoc;
  for (int a = 0; a < g.order && !assoc; ++a)
    for (int b = 0; b < g.order && !assoc; ++b)
      for (int c = 0; c < g.order && !assoc; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          assoc = "witness (" + name(a) + "," + name(b) + "," + name(c) + ")";
  rep.add("group.associativity", {}, assoc);

  std::optional<std::string> comm;
  for (int a = 0; a < g.order && !comm; ++a)
    for (int b = 0; b < g.order && !comm; ++b)
      if (g.op(a, b) != g.op(b, a)) comm = "witness (" + name(a) + "," + name(b) + ")";
  rep.add("group.commutativity", {}, comm);

  std::optional<std::string> ident;
  for (int a = 0; a < g.order && !ident; ++a) {
    if (g.op(g.identity, a) != a || g.op(a, g.identity) != a)
      ident = "witness " + name(a) + " against identity " + name(g.identity);
  }
  rep.add("group.identity", {}, ident);

  std::optional<std::string> invs;
  for (int a = 0; a < g.order && !invs; ++a) {
    const int b = g.inv(a);
    if (g.op(a, b) != g.identity || g.op(b, a) != g.identity)
      invs = "witness " + name(a) + " with claimed inverse " + name(b);
  }
  rep.add("group.inverses", {}, invs);
  return rep;
}

}  // namespace phm
