#include "cqsym/classify.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "cqsym/cqf.hpp"
#include "cqsym/families.hpp"

namespace cqsym {

namespace {

Json parts_json(const Composition& c) { return Json(c.parts()); }

}  // namespace

Json to_json(const ClassificationRecord& r) {
  Json j{{"graph", to_json(r.graph)},
         {"n", r.n},
         {"num_edges", r.num_edges},
         {"symmetric", r.symmetric},
         {"tags", r.tags}};
  if (r.e_positive) j["e_positive"] = *r.e_positive;
  if (r.palindromic) j["palindromic"] = *r.palindromic;
  if (r.witness) j["witness"] = Json::array({parts_json(r.witness->first), parts_json(r.witness->second)});
  return j;
}

ClassificationRecord record_from_json(const Json& j) {
  ClassificationRecord r;
  r.graph = graph_from_json(j.at("graph"));
  r.n = j.at("n").get<int>();
  r.num_edges = j.at("num_edges").get<int>();
  r.symmetric = j.at("symmetric").get<bool>();
  r.tags = j.at("tags").get<std::vector<std::string>>();
  if (j.contains("e_positive")) r.e_positive = j["e_positive"].get<bool>();
  if (j.contains("palindromic")) r.palindromic = j["palindromic"].get<bool>();
  if (j.contains("witness")) {
    r.witness = {Composition(j["witness"][0].get<std::vector<int>>()), Composition(j["witness"][1].get<std::vector<int>>())};
  }
  return r;
}

FamilyIndex::FamilyIndex(int n) {
  for (const auto& h : hessenberg_functions(n, true)) unit_interval_.insert(canonical_form(natural_unit_interval(h)));
  for (const auto& spec : mixed_specs(n)) mixed_.insert(canonical_form(mixed_mountain(spec).graph));
}

std::vector<std::string> FamilyIndex::tags(const OrientedGraph& canonical) const {
  std::vector<std::string> t;
  if (unit_interval_.count(canonical)) t.push_back(kTagUnitInterval);
  if (mixed_.count(canonical)) t.push_back(kTagMixedMountain);
  if (t.empty()) t.push_back(kTagOther);
  return t;
}

ClassificationRecord classify_graph(const OrientedGraph& g, const FamilyIndex& index) {
  ClassificationRecord r;
  r.graph = canonical_form(g);
  r.n = g.n();
  r.num_edges = g.num_edges();
  auto f = cqf(r.graph);
  r.witness = nonsymmetry_witness(f);
  r.symmetric = !r.witness;
  if (r.symmetric) {
    r.e_positive = is_e_positive(f);
    r.palindromic = is_palindromic(f, r.num_edges);
  }
  r.tags = index.tags(r.graph);
  return r;
}

std::string cache_key(const OrientedGraph& canonical) {
  std::string text = to_json(canonical).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr)) {
    throw InternalInconsistency("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::filesystem::path ResultCache::path_for(int n, const std::string& key) const {
  return dir_ / ("n" + std::to_string(n)) / (key + ".json");
}

std::optional<std::string> ResultCache::load(int n, const std::string& key) const {
  std::ifstream in(path_for(n, key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // A truncated or foreign file is treated as a miss and rewritten.
  if (!Json::accept(text)) return std::nullopt;
  return text;
}

void ResultCache::store(int n, const std::string& key, const std::string& text) const {
  auto target = path_for(n, key);
  std::filesystem::create_directories(target.parent_path());
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

ClassifySummary classify_all(const ClassifyOptions& opt, const std::function<void(const std::string&)>& emit) {
  if (opt.min_n < 1 || opt.max_n < opt.min_n) throw InvalidArgument("need 1 <= min_n <= max_n");
  if (opt.max_n > 7 && !opt.unsafe_large) throw SizeGuard("classification past n = 7 needs --unsafe-large");
  if (opt.max_n > 8) throw SizeGuard("classification is limited to n <= 8");
  std::optional<ResultCache> cache;
  if (opt.cache_dir) cache.emplace(*opt.cache_dir);
  ClassifySummary sum;
  sum.per_n_records.assign(opt.max_n + 1, 0);
  sum.per_n_symmetric.assign(opt.max_n + 1, 0);
  for (int n = opt.min_n; n <= opt.max_n; ++n) {
    auto graphs = all_connected_dags(n, opt.unsafe_large);
    FamilyIndex index(n);
    std::vector<std::string> texts(graphs.size());
    std::vector<char> hit(graphs.size(), 0), mismatch(graphs.size(), 0), rechecked(graphs.size(), 0);
    std::atomic<std::size_t> next{0}, hits_seen{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < graphs.size();) {
        const auto& g = graphs[i];
        std::string key = cache ? cache_key(g) : "";
        if (cache) {
          if (auto text = cache->load(n, key)) {
            texts[i] = *text;
            hit[i] = 1;
            std::size_t h = hits_seen++;
            if (opt.recheck_every > 0 && h % opt.recheck_every == 0) {
              rechecked[i] = 1;
              mismatch[i] = to_json(classify_graph(g, index)).dump() != *text;
            }
            continue;
          }
        }
        texts[i] = to_json(classify_graph(g, index)).dump();
        if (cache) cache->store(n, key, texts[i]);
      }
    };
    int w = std::max(1, opt.workers);
    std::vector<std::thread> pool;
    for (int t = 1; t < w; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto rec = record_from_json(Json::parse(texts[i]));
      ++sum.records;
      ++sum.per_n_records[n];
      if (rec.symmetric) {
        ++sum.symmetric;
        ++sum.per_n_symmetric[n];
        if (rec.tags == std::vector<std::string>{kTagOther}) ++sum.symmetric_untagged;
      }
      sum.cache_hits += hit[i];
      sum.rechecked += rechecked[i];
      sum.recheck_mismatches += mismatch[i];
      if (emit) emit(texts[i]);
    }
  }
  return sum;
}

}  // namespace cqsym
