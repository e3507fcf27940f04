// io.cpp

#include "tautri/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace tautri {

namespace {

bool alnum_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string coef_str(long long num, long long den) {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

void serialize_into(const BoundPresentation& p, const std::string& prefix, std::ostream& out) {
  const Quiver& q = p.quiver;
  out << "[" << prefix << "quiver]\n";
  out << "vertices =";
  for (const auto& v : q.vertices()) out << " " << v;
  out << "\n";
  if (q.arrow_count() > 0) {
    out << "arrows =";
    for (const auto& a : q.arrows())
      out << " " << a.id << ":" << q.vertices()[a.src] << "->" << q.vertices()[a.tgt];
    out << "\n";
  }
  if (!p.relations.empty()) {
    out << "[" << prefix << "relations]\n";
    for (const Relation& rel : p.relations) {
      for (size_t t = 0; t < rel.size(); ++t) {
        if (t) out << " + ";
        out << coef_str(rel[t].num, rel[t].den) << "*";
        for (size_t i = 0; i < rel[t].path.size(); ++i)
          out << (i ? "." : "") << q.arrow(rel[t].path[i]).id;
      }
      out << "\n";
    }
  }
  out << "[" << prefix << "options]\n";
  out << "cap = " << p.nilpotency_cap << "\n";
  out << "field = " << p.field.str() << "\n";
  if (p.tag.kind != ConstructionTag::Kind::None) {
    out << "[" << prefix << "meta]\n";
    switch (p.tag.kind) {
      case ConstructionTag::Kind::TriangularMatrix:
        out << "construction = tn\n"
            << "n = " << p.tag.n << "\n";
        break;
      case ConstructionTag::Kind::Tensor:
        out << "construction = tensor\n";
        break;
      case ConstructionTag::Kind::RadSquareTruncation:
        out << "construction = rad2\n";
        break;
      default:
        break;
    }
    for (size_t f = 0; f < p.tag.factors.size(); ++f)
      serialize_into(p.tag.factors[f], prefix + "factor" + std::to_string(f + 1) + ".", out);
  }
}

struct Sections {
  std::vector<std::pair<std::string, std::vector<std::string>>> list;

  const std::vector<std::string>* find(const std::string& name) const {
    for (const auto& [n, lines] : list)
      if (n == name) return &lines;
    return nullptr;
  }
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error("cannot parse " + what + " from '" + s + "'");
  }
}

BoundPresentation parse_from(const Sections& all, const std::string& prefix);

BoundPresentation parse_sections(const Sections& secs, const std::string& prefix) {
  const auto* quiver_lines = secs.find(prefix + "quiver");
  if (!quiver_lines) throw parse_error("missing [" + prefix + "quiver] section");

  std::vector<std::string> verts;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  {
    std::vector<std::string> toks;
    for (const auto& l : *quiver_lines) {
      auto t = tokenize(l);
      toks.insert(toks.end(), t.begin(), t.end());
    }
    size_t i = 0;
    while (i < toks.size()) {
      std::string key = toks[i++];
      if (key != "vertices" && key != "arrows")
        throw parse_error("unknown key '" + key + "' in [" + prefix + "quiver]");
      if (i >= toks.size() || toks[i] != "=")
        throw parse_error("expected '=' after '" + key + "' in [" + prefix + "quiver]");
      ++i;
      while (i < toks.size() && toks[i] != "vertices" && toks[i] != "arrows") {
        const std::string& v = toks[i++];
        if (key == "vertices") {
          if (!alnum_token(v)) throw parse_error("vertex id '" + v + "' is not alphanumeric");
          verts.push_back(v);
        } else {
          auto colon = v.find(':');
          auto arr = v.find("->");
          if (colon == std::string::npos || arr == std::string::npos || arr < colon)
            throw parse_error("arrow '" + v + "' must look like id:src->tgt");
          std::string id = v.substr(0, colon);
          std::string src = v.substr(colon + 1, arr - colon - 1);
          std::string tgt = v.substr(arr + 2);
          if (!alnum_token(id) || !alnum_token(src) || !alnum_token(tgt))
            throw parse_error("arrow '" + v + "' has non-alphanumeric tokens");
          arrows.emplace_back(id, src, tgt);
        }
      }
    }
  }

  BoundPresentation p;
  p.quiver = Quiver(std::move(verts), std::move(arrows));

  if (const auto* opt_lines = secs.find(prefix + "options")) {
    std::vector<std::string> toks;
    for (const auto& l : *opt_lines) {
      auto t = tokenize(l);
      toks.insert(toks.end(), t.begin(), t.end());
    }
    for (size_t i = 0; i < toks.size();) {
      std::string key = toks[i++];
      if (i >= toks.size() || toks[i] != "=")
        throw parse_error("expected '=' after '" + key + "' in [" + prefix + "options]");
      ++i;
      if (i >= toks.size()) throw parse_error("missing value for '" + key + "'");
      std::string val = toks[i++];
      if (key == "cap")
        p.nilpotency_cap = static_cast<int>(parse_int(val, "cap"));
      else if (key == "field")
        p.field = FieldSpec::parse(val);
      else
        throw parse_error("unknown key '" + key + "' in [" + prefix + "options]");
    }
  }

  if (const auto* rel_lines = secs.find(prefix + "relations")) {
    for (const auto& line : *rel_lines) {
      Relation rel;
      std::istringstream in(line);
      std::vector<std::string> terms;
      std::string tok, cur;
      while (in >> tok) {
        if (tok == "+") {
          if (!cur.empty()) terms.push_back(cur);
          cur.clear();
        } else {
          cur += cur.empty() ? tok : " " + tok;
        }
      }
      if (!cur.empty()) terms.push_back(cur);
      for (const auto& t : terms) {
        auto star = t.find('*');
        if (star == std::string::npos)
          throw parse_error("relation term '" + t + "' must be coefficient*path");
        std::string coef = t.substr(0, star);
        std::string path = t.substr(star + 1);
        RelationTerm rt;
        auto slash = coef.find('/');
        if (slash == std::string::npos) {
          rt.num = parse_int(coef, "coefficient");
          rt.den = 1;
        } else {
          rt.num = parse_int(coef.substr(0, slash), "coefficient numerator");
          rt.den = parse_int(coef.substr(slash + 1), "coefficient denominator");
        }
        std::string id;
        std::istringstream ps(path);
        while (std::getline(ps, id, '.')) {
          auto ai = p.quiver.arrow_index(id);
          if (!ai) throw parse_error("relation references unknown arrow '" + id + "'");
          rt.path.push_back(*ai);
        }
        rel.push_back(std::move(rt));
      }
      if (!rel.empty()) p.relations.push_back(std::move(rel));
    }
  }

  if (const auto* meta_lines = secs.find(prefix + "meta")) {
    std::vector<std::string> toks;
    for (const auto& l : *meta_lines) {
      auto t = tokenize(l);
      toks.insert(toks.end(), t.begin(), t.end());
    }
    for (size_t i = 0; i < toks.size();) {
      std::string key = toks[i++];
      if (i >= toks.size() || toks[i] != "=")
        throw parse_error("expected '=' after '" + key + "' in [" + prefix + "meta]");
      ++i;
      std::string val = toks[i++];
      if (key == "construction") {
        if (val == "tn")
          p.tag.kind = ConstructionTag::Kind::TriangularMatrix;
        else if (val == "tensor")
          p.tag.kind = ConstructionTag::Kind::Tensor;
        else if (val == "rad2")
          p.tag.kind = ConstructionTag::Kind::RadSquareTruncation;
        else
          throw parse_error("unknown construction '" + val + "'");
      } else if (key == "n") {
        p.tag.n = static_cast<int>(parse_int(val, "construction order"));
      } else {
        throw parse_error("unknown key '" + key + "' in [" + prefix + "meta]");
      }
    }
    for (int f = 1;; ++f) {
      std::string fp = prefix + "factor" + std::to_string(f) + ".";
      if (!secs.find(fp + "quiver")) break;
      p.tag.factors.push_back(parse_from(secs, fp));
    }
  }

  p.validate();
  return p;
}

BoundPresentation parse_from(const Sections& all, const std::string& prefix) {
  return parse_sections(all, prefix);
}

}  // namespace

std::string serialize_presentation(const BoundPresentation& p) {
  p.validate();
  std::ostringstream out;
  serialize_into(p, "", out);
  return out.str();
}

BoundPresentation parse_presentation(const std::string& text) {
  Sections secs;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i < raw.size() && raw[i] == '[') {
      auto close = raw.find(']', i);
      if (close == std::string::npos)
        throw parse_error("line " + std::to_string(lineno) + ": unterminated section header");
      current = raw.substr(i + 1, close - i - 1);
      secs.list.emplace_back(current, std::vector<std::string>{});
      raw = raw.substr(close + 1);
    }
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (current.empty())
      throw parse_error("line " + std::to_string(lineno) + ": content before any section");
    secs.list.back().second.push_back(raw);
  }
  try {
    return parse_from(secs, "");
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

BoundPresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open algebra file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void save_presentation_file(const BoundPresentation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write algebra file '" + path + "'");
  out << serialize_presentation(p);
}

std::vector<CorpusItem> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open corpus file '" + path + "'");
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::vector<CorpusItem> items;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": corpus lines are '<algebra-file> <n> <expected>'");
    CorpusItem item;
    item.path = toks[0];
    std::filesystem::path f(item.path);
    if (f.is_relative()) f = dir / f;
    item.pres = load_presentation_file(f.string());
    item.n = static_cast<int>(parse_int(toks[1], "corpus n"));
    item.expected = toks[2];
    if (item.expected != "tau-finite" && item.expected != "tau-infinite" &&
        item.expected != "unknown")
      throw parse_error(path + ":" + std::to_string(lineno) + ": expected verdict must be " +
                        "tau-finite, tau-infinite or unknown");
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace tautri
