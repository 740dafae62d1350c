// Human-readable box drawing and the flat clause interchange format.
#ifndef AMRPLUS_RENDER_HPP
#define AMRPLUS_RENDER_HPP

#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "amrplus/drs.hpp"
#include "amrplus/penman.hpp"

namespace amrplus {

namespace detail {

inline std::string drs_arg_text(const DrsArg& a) {
  if (is_referent(a)) return referent(a);
  return print_constant(std::get<Constant>(a));
}

using Block = std::vector<std::string>;

inline std::size_t block_width(const Block& b) {
  std::size_t w = 0;
  for (const auto& line : b) w = std::max(w, line.size());
  return w;
}

// Joins blocks side by side, top-aligned, one space apart.
inline Block hcat(const std::vector<Block>& blocks) {
  std::size_t height = 0;
  for (const auto& b : blocks) height = std::max(height, b.size());
  std::vector<std::size_t> widths;
  for (const auto& b : blocks) widths.push_back(block_width(b));
  Block out;
  for (std::size_t row = 0; row < height; ++row) {
    std::string line;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) line += ' ';
      std::string cell =
          row < blocks[i].size() ? blocks[i][row] : std::string();
      cell.resize(widths[i], ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

inline Block box_block(const Drs& d) {
  std::vector<Block> content;
  for (const auto& cond : d.conditions) {
    if (const auto* p = std::get_if<PredCondition>(&cond)) {
      content.push_back({p->name + "(" + drs_arg_text(p->arg) + ")"});
    } else if (const auto* r = std::get_if<RelCondition>(&cond)) {
      content.push_back({r->name + "(" + drs_arg_text(r->first) + "," +
                         drs_arg_text(r->second) + ")"});
    } else if (const auto* n = std::get_if<NotCondition>(&cond)) {
      content.push_back(hcat({{"NOT"}, box_block(*n->body)}));
    } else if (const auto* imp = std::get_if<ImpCondition>(&cond)) {
      content.push_back(
          hcat({box_block(*imp->ante), {"=>"}, box_block(*imp->cons)}));
    }
  }

  std::string refs;
  for (const auto& r : d.referents) {
    if (!refs.empty()) refs += ' ';
    refs += r;
  }

  std::size_t width = refs.size();
  for (const auto& b : content) width = std::max(width, block_width(b));

  auto rule = [&]() { return "+" + std::string(width + 2, '-') + "+"; };
  auto row = [&](std::string text) {
    text.resize(width, ' ');
    return "| " + text + " |";
  };

  Block out;
  out.push_back(rule());
  out.push_back(row(refs));
  out.push_back(rule());
  for (const auto& b : content) {
    for (const auto& line : b) out.push_back(row(line));
  }
  out.push_back(rule());
  return out;
}

}  // namespace detail

inline std::string render_box(const Drs& d) {
  std::string out;
  for (const auto& line : detail::box_block(d)) {
    out += line;
    out += '\n';
  }
  return out;
}

// Presupposed boxes come first under a PRESUP: header, then the main box.
inline std::string render_box(const DrsOutput& out) {
  std::string text;
  if (!out.presuppositions.empty()) {
    text += "PRESUP:\n";
    for (const auto& p : out.presuppositions) text += render_box(p);
  }
  text += render_box(out.main);
  return text;
}

// ---------------------------------------------------------------------------
// Clause format
//
// One clause per line; boxes are named b0, b1, ... in order of first mention
// (main box first, then its presuppositions, then nested boxes breadth
// first):
//   <box> REF <referent>
//   <box> <pred> <arg>
//   <box> <rel> <arg> <arg>
//   <box> NOT <box>
//   <box> IMP <box> <box>
//   <box> PRS <box>

inline std::string render_clauses(const DrsOutput& out) {
  std::map<const Drs*, std::string> names;
  int next_id = 0;
  auto name_of = [&](const Drs* d) {
    auto it = names.find(d);
    if (it != names.end()) return it->second;
    std::string n = "b" + std::to_string(next_id++);
    names.emplace(d, n);
    return n;
  };

  std::ostringstream text;
  std::deque<const Drs*> queue;

  std::string main_name = name_of(&out.main);
  for (const auto& p : out.presuppositions) {
    text << main_name << " PRS " << name_of(&p) << '\n';
  }
  queue.push_back(&out.main);
  for (const auto& p : out.presuppositions) queue.push_back(&p);

  while (!queue.empty()) {
    const Drs* d = queue.front();
    queue.pop_front();
    const std::string& bn = names.at(d);
    for (const auto& r : d->referents) {
      text << bn << " REF " << r << '\n';
    }
    for (const auto& cond : d->conditions) {
      if (const auto* p = std::get_if<PredCondition>(&cond)) {
        text << bn << ' ' << p->name << ' ' << detail::drs_arg_text(p->arg)
             << '\n';
      } else if (const auto* r = std::get_if<RelCondition>(&cond)) {
        text << bn << ' ' << r->name << ' ' << detail::drs_arg_text(r->first)
             << ' ' << detail::drs_arg_text(r->second) << '\n';
      } else if (const auto* n = std::get_if<NotCondition>(&cond)) {
        const Drs* body = &*n->body;
        text << bn << " NOT " << name_of(body) << '\n';
        queue.push_back(body);
      } else if (const auto* imp = std::get_if<ImpCondition>(&cond)) {
        const Drs* ante = &*imp->ante;
        const Drs* cons = &*imp->cons;
        text << bn << " IMP " << name_of(ante) << ' ' << name_of(cons)
             << '\n';
        queue.push_back(ante);
        queue.push_back(cons);
      }
    }
  }
  return text.str();
}

}  // namespace amrplus

#endif  // AMRPLUS_RENDER_HPP
