#!/usr/bin/env python3
"""Regenerates the bundled fixture dataset.

Writes the Italian (it/) and English (en/) ontologies, lexicons, gazetteers,
GeoJSON item files and the annotated query log. Output is deterministic;
rerunning reproduces the committed files byte for byte.

Gold item sets for concept-only queries are computed here, independently of
the C++ code: every instance of the concept whose bounding box overlaps the
query box. Gold sets for qualifier queries are written out by hand.
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

# --------------------------------------------------------------------------
# Gazetteer

GAZETTEER = {
    "torino": (7.5786, 45.0068, 7.7734, 45.1332),
    "san mauro torinese": (7.7400, 45.0850, 7.8300, 45.1300),
    "moncalieri": (7.6300, 44.9500, 7.7500, 45.0200),
    "asti": (8.1300, 44.8600, 8.2700, 44.9500),
    "cuneo": (7.4800, 44.3500, 7.5900, 44.4300),
    "novara": (8.5600, 45.4100, 8.6700, 45.4800),
    "alessandria": (8.5500, 44.8700, 8.6900, 44.9500),
    "biella": (8.0000, 45.5300, 8.0900, 45.5900),
    "vercelli": (8.3700, 45.2900, 8.4600, 45.3500),
    "ivrea": (7.8400, 45.4400, 7.9000, 45.4900),
    "pinerolo": (7.3000, 44.8600, 7.3800, 44.9100),
    "piemonte": (6.6270, 43.9900, 9.2140, 46.4650),
}

# --------------------------------------------------------------------------
# Ontology


def concept(cid, label, lemma, synonyms=(), keywords=(), parent=None,
            relations=(), properties=()):
    return {
        "id": cid,
        "label": label,
        "lemma": lemma,
        "synonyms": list(synonyms),
        "keywords": list(keywords),
        "parent": parent,
        "relations": list(relations),
        "properties": list(properties),
    }


IT_CONCEPTS = [
    concept("AreaProtetta", "Area protetta", "area protetta",
            ["riserva naturale"], ["parco", "riserva", "natura", "tutela"],
            "AreaVerde", [], ["tipologia", "ente_gestore", "superficie"]),
    concept("AreaVerde", "Area verde", "area verde", ["verde pubblico"],
            ["giardino", "prato"], None, [], ["tipologia"]),
    concept("Biblioteca", "Biblioteca", "biblioteca", ["mediateca"],
            ["libro", "lettura", "prestito"], "ServiziPubblici", [],
            ["tipologia", "indirizzo", "gestore"]),
    concept("FermataBus", "Fermata bus", "fermata",
            ["fermata autobus", "fermata bus"],
            ["autobus", "linea", "trasporto"], "Servizi", [],
            ["linee", "codice"]),
    concept("LuogoDiCulto", "Luogo di culto", "luogo culto",
            ["basilica", "chiesa", "parrocchia", "santuario"],
            ["preghiera", "religione", "culto", "messa"], "Servizi", [],
            ["stile", "confessione", "indirizzo"]),
    concept("Museo", "Museo", "museo", ["pinacoteca"],
            ["mostra", "esposizione", "arte", "collezione"], "Servizi",
            ["nearTo -> ParcoUrbano"], ["tipologia", "indirizzo", "gestore"]),
    concept("Ospedale", "Ospedale", "ospedale", ["nosocomio", "clinica"],
            ["cura", "ammalato", "ferito", "edificio",
             {"lemma": "assistenza", "weight": 0.5}],
            "ServiziPubblici", ["nearTo -> Scuola"],
            ["tipologia", "gestore", "indirizzo", "posti_letto",
             "pronto_soccorso"]),
    concept("ParcoProvinciale", "Parco provinciale", "parco provinciale", [],
            ["parco", "natura"], "AreaVerde", [],
            ["ente_gestore", "superficie"]),
    concept("ParcoRegionale", "Parco regionale", "parco regionale", [],
            ["parco", "natura", "riserva"], "AreaVerde", [],
            ["ente_gestore", "superficie"]),
    concept("ParcoUrbano", "Parco urbano", "parco urbano",
            ["giardino pubblico"], ["parco", "verde", "giardino", "passeggiata"],
            "AreaVerde", [], ["circoscrizione", "superficie"]),
    concept("Scuola", "Scuola", "scuola", ["istituto scolastico"],
            ["istruzione", "studente", "insegnamento", "educazione"],
            "ServiziPubblici", [], ["grado", "gestione", "indirizzo"]),
    concept("Servizi", "Servizi", "servizio", [], ["utilità"], None, [], []),
    concept("ServiziPubblici", "Servizi pubblici", "servizio pubblico",
            ["pubblico servizio"], [], "Servizi",
            ["servedBy -> FermataBus"], ["gestore"]),
]

EN_CONCEPTS = [
    concept("Hospital", "Hospital", "hospital", ["clinic"],
            ["care", "patient"], "PublicServices", [], ["type", "operator"]),
    concept("PublicServices", "Public services", "public service", [], [],
            "Services", [], ["operator"]),
    concept("School", "School", "school", [], ["education", "student"],
            "PublicServices", [], ["level", "operator"]),
    concept("Services", "Services", "service", [], [], None, [], []),
    concept("Transportation", "Transportation", "transportation",
            ["transport"], ["bus", "train"], "PublicServices", [],
            ["mode"]),
]

# --------------------------------------------------------------------------
# Lexicons

IT_LEMMAS = {
    "ospedali": "ospedale", "nosocomi": "nosocomio", "cliniche": "clinica",
    "pediatrici": "pediatrico", "pediatrica": "pediatrico",
    "pediatriche": "pediatrico", "infantili": "infantile",
    "scuole": "scuola", "primarie": "primaria", "paritarie": "paritaria",
    "parchi": "parco", "musei": "museo", "pinacoteche": "pinacoteca",
    "biblioteche": "biblioteca", "fermate": "fermata", "chiese": "chiesa",
    "santuari": "santuario", "basiliche": "basilica",
    "parrocchie": "parrocchia", "egizi": "egizio", "egizia": "egizio",
    "egizie": "egizio", "civica": "civico", "civiche": "civico",
    "civici": "civico", "barocche": "barocco", "barocca": "barocco",
    "barocchi": "barocco", "oftalmici": "oftalmico",
    "oftalmica": "oftalmico", "pubblici": "pubblico", "pubbliche": "pubblico",
    "pubblica": "pubblico", "servizi": "servizio", "aree": "area",
    "protette": "protetta", "verdi": "verde", "bambini": "bambino",
    "bambine": "bambino", "urbani": "urbano", "regionali": "regionale",
    "provinciali": "provinciale", "licei": "liceo", "classici": "classico",
    "superiori": "superiore", "giardini": "giardino", "autobus": "autobus",
}

IT_STOPWORDS = [
    "a", "ad", "agli", "ai", "al", "alla", "alle", "che", "con", "da", "dal",
    "dalla", "dei", "degli", "del", "della", "delle", "dell", "di", "dove",
    "e", "ed", "fra", "gli", "i", "il", "in", "l", "la", "le", "lo", "nei",
    "nel", "nella", "o", "per", "su", "tra", "un", "una", "uno",
]

IT_SYNONYMS = [
    ["nosocomio", "ospedale"],
    ["pediatrico", "infantile"],
    ["museo", "pinacoteca"],
    ["chiesa", "parrocchia"],
]

EN_LEMMAS = {
    "schools": "school", "services": "service", "hospitals": "hospital",
    "clinics": "clinic", "transports": "transport",
}
EN_STOPWORDS = ["a", "an", "and", "for", "in", "of", "the", "to", "with"]
EN_SYNONYMS = [["hospital", "clinic"], ["transportation", "transport"]]

# --------------------------------------------------------------------------
# Items


def point(lon, lat):
    return {"type": "Point", "coordinates": [lon, lat]}


def rect(lon0, lat0, lon1, lat1):
    return [[lon0, lat0], [lon1, lat0], [lon1, lat1], [lon0, lat1], [lon0, lat0]]


def polygon(lon0, lat0, lon1, lat1):
    return {"type": "Polygon", "coordinates": [rect(lon0, lat0, lon1, lat1)]}


def feature(fid, geometry, props):
    f = {"type": "Feature"}
    if fid is not None:
        f["id"] = fid
    f["geometry"] = geometry
    f["properties"] = props
    return f


ASL = "ASL Città di Torino"
CDS = "AOU Città della Salute e della Scienza di Torino"

TORINO_HOSPITALS = [
    ("osp-regina-margherita", polygon(7.6738, 45.0375, 7.6768, 45.0395),
     "Ospedale Infantile Regina Margherita", CDS,
     "Azienda ospedaliera universitaria", "Piazza Polonia 94", "250", "si"),
    ("osp-molinette", polygon(7.6700, 45.0400, 7.6760, 45.0440),
     "Presidio Ospedaliero Molinette", "AOU San Giovanni Battista",
     "Azienda ospedaliera universitaria", "Corso Bramante 88", "1200", "si"),
    ("osp-san-giovanni-bosco", point(7.6950, 45.0950),
     "Ospedale San Giovanni Bosco", ASL, "Presidio ospedaliero",
     "Piazza del Donatore di Sangue 3", "400", "si"),
    ("osp-maria-vittoria", point(7.6580, 45.0800), "Ospedale Maria Vittoria",
     ASL, "Presidio ospedaliero", "Via Luigi Cibrario 72", "350", "si"),
    ("osp-amedeo-di-savoia", point(7.6590, 45.0890),
     "Ospedale Amedeo di Savoia", ASL, "Presidio ospedaliero",
     "Corso Svizzera 164", "180", "no"),
    ("osp-martini", point(7.6220, 45.0550), "Ospedale Martini", ASL,
     "Presidio ospedaliero", "Via Tofane 71", "300", "si"),
    ("osp-mauriziano", point(7.6640, 45.0500),
     "Ospedale Mauriziano Umberto I", "AO Ordine Mauriziano",
     "Azienda ospedaliera", "Largo Filippo Turati 62", "450", "si"),
    ("osp-oftalmico", point(7.6700, 45.0720), "Ospedale Oftalmico", ASL,
     "Presidio ospedaliero", "Via Juvarra 19", "60", "no"),
    ("osp-cottolengo", point(7.6830, 45.0780), "Ospedale Cottolengo",
     "Piccola Casa della Divina Provvidenza", "Ospedale classificato",
     "Via Cottolengo 9", "200", "no"),
    ("osp-gradenigo", point(7.6950, 45.0760), "Presidio Sanitario Gradenigo",
     "Gruppo Humanitas", "Presidio sanitario", "Corso Regina Margherita 8",
     "220", "si"),
    ("osp-koelliker", point(7.6650, 45.0450), "Ospedale Koelliker",
     "Ospedale Koelliker SpA", "Casa di cura", "Corso Galileo Ferraris 247",
     "150", "no"),
    ("osp-valdese", point(7.6810, 45.0560), "Ospedale Evangelico Valdese",
     ASL, "Presidio ospedaliero", "Via Silvio Pellico 19", "90", "no"),
    ("osp-san-vito", point(7.7100, 45.0470), "Ospedale San Vito", ASL,
     "Presidio ospedaliero", "Strada Revigliasco 34", "70", "no"),
    ("osp-cto", point(7.6700, 45.0320), "Centro Traumatologico Ortopedico",
     CDS, "Azienda ospedaliera universitaria", "Via Zuretti 29", "330", "si"),
    ("osp-sant-anna", point(7.6740, 45.0340), "Ospedale Sant'Anna", CDS,
     "Presidio ostetrico ginecologico", "Corso Spezia 60", "280", "si"),
    ("osp-fornaca", point(7.6650, 45.0650), "Clinica Fornaca di Sessant",
     "GVM Care e Research", "Casa di cura", "Corso Vittorio Emanuele II 91",
     "110", "no"),
    ("osp-pinna-pintor", point(7.6500, 45.0600), "Casa di Cura Pinna Pintor",
     "Policlinico di Monza", "Casa di cura", "Via Vittorio Amedeo II 14",
     "95", "no"),
    ("osp-sedes-sapientiae", point(7.6450, 45.0700),
     "Clinica Sedes Sapientiae", "Congregazione Suore Ospedaliere",
     "Casa di cura", "Via Mercalli 30", "85", "no"),
]

# Hospitals elsewhere in Piedmont get no explicit id; the store derives one.
OUTSIDE_TOWNS = [
    ("asti", 7), ("cuneo", 7), ("novara", 7), ("alessandria", 7),
    ("biella", 6), ("vercelli", 6), ("ivrea", 5), ("pinerolo", 5),
    ("moncalieri", 4), ("piemonte", 13),
]

SURNAMES = [
    "Bertolini", "Ferrero", "Gallo", "Marchetti", "Rinaldi", "Bianchi",
    "Costa", "Fontana", "Moretti", "Greco", "Lombardi", "Barbieri",
    "Colombo", "Mancini", "Ricci", "Conti", "Esposito", "Bruno", "Galli",
    "Villa", "Serra", "Longo", "Gentile", "Martinelli", "Vitale", "Leone",
    "Ferraro", "Caruso", "Pellegrini", "Palumbo",
]
SAINTS = ["Sant'Andrea", "San Biagio", "Santo Spirito", "San Lazzaro",
          "Santa Croce", "San Matteo", "Sant'Agostino", "San Rocco"]
PATTERNS = ["Ospedale Civile di {town}", "Casa di Cura {surname}",
            "Poliambulatorio {surname}", "Ospedale {saint} di {town}",
            "Clinica {surname}", "Presidio Sanitario {surname} di {town}"]
TOWN_LABEL = {
    "asti": "Asti", "cuneo": "Cuneo", "novara": "Novara",
    "alessandria": "Alessandria", "biella": "Biella", "vercelli": "Vercelli",
    "ivrea": "Ivrea", "pinerolo": "Pinerolo", "moncalieri": "Moncalieri",
}
RURAL_TOWNS = ["Bra", "Alba", "Saluzzo", "Savigliano", "Mondovì", "Fossano",
               "Chivasso", "Ciriè", "Susa", "Domodossola", "Verbania",
               "Casale Monferrato", "Tortona", "Acqui Terme", "Ovada"]


def outside_hospitals(rng):
    out = []
    n = 0
    rural = iter(RURAL_TOWNS * 2)
    for town, count in OUTSIDE_TOWNS:
        lon0, lat0, lon1, lat1 = GAZETTEER[town]
        if town == "moncalieri":
            lat1 = 44.995  # stay clear of the strip shared with Torino
        for _ in range(count):
            if town == "piemonte":
                # Somewhere in the region, outside every town box.
                while True:
                    lon = round(rng.uniform(7.0, 8.9), 5)
                    lat = round(rng.uniform(44.2, 45.9), 5)
                    if not any(box_contains(GAZETTEER[t], lon, lat)
                               for t in GAZETTEER if t != "piemonte"):
                        break
                label = next(rural)
            else:
                mlon = (lon1 - lon0) * 0.1
                mlat = (lat1 - lat0) * 0.1
                lon = round(rng.uniform(lon0 + mlon, lon1 - mlon), 5)
                lat = round(rng.uniform(lat0 + mlat, lat1 - mlat), 5)
                label = TOWN_LABEL[town]
            name = PATTERNS[n % len(PATTERNS)].format(
                town=label, surname=SURNAMES[n % len(SURNAMES)],
                saint=SAINTS[n % len(SAINTS)])
            props = {
                "name": name,
                "gestore": "ASL " + label,
                "tipologia": "Presidio ospedaliero" if n % 2 else "Casa di cura",
                "posti_letto": str(40 + (n * 37) % 400),
                "pronto_soccorso": "si" if n % 3 == 0 else "no",
            }
            out.append(feature(None, point(lon, lat), props))
            n += 1
    return out


def box_contains(box, lon, lat):
    return box[0] <= lon <= box[2] and box[1] <= lat <= box[3]


def hospitals_doc(rng):
    feats = []
    for (fid, geom, name, gestore, tipo, addr, beds, ps) in TORINO_HOSPITALS:
        feats.append(feature(fid, geom, {
            "name": name, "gestore": gestore, "tipologia": tipo,
            "indirizzo": addr, "posti_letto": beds, "pronto_soccorso": ps}))
    feats.extend(outside_hospitals(rng))
    assert len(feats) == 85, len(feats)
    return {"type": "FeatureCollection", "features": feats}


SCHOOLS = [
    # Torino
    ("sch-arduino", 7.6775, 45.0392, "Istituto Arduino",
     "Scuola secondaria di secondo grado", "statale", "Via Figlie dei Militari 25"),
    ("sch-gabelli", 7.6600, 45.0830, "Scuola Primaria Gabelli",
     "Scuola primaria", "statale", "Via Santhià 25"),
    ("sch-pestalozzi", 7.6930, 45.0890, "Scuola Primaria Pestalozzi",
     "Scuola primaria", "statale", "Via Banfo 32"),
    ("sch-manzoni", 7.6480, 45.0620, "Scuola Primaria Manzoni",
     "Scuola primaria", "statale", "Via Cesare Battisti 11"),
    ("sch-maria-ausiliatrice", 7.6720, 45.0860,
     "Scuola paritaria Maria Ausiliatrice",
     "Scuola secondaria di primo grado", "paritaria", "Via Cigna 18"),
    ("sch-primavera", 7.6380, 45.0500, "Scuola dell'infanzia Primavera",
     "Scuola dell'infanzia", "comunale", "Via Monte Ortigara 95"),
    ("sch-dazeglio", 7.6830, 45.0600, "Liceo Classico Massimo D'Azeglio",
     "Liceo", "statale", "Via Parini 8"),
    ("sch-galileo-ferraris", 7.6620, 45.0700,
     "Liceo Scientifico Galileo Ferraris", "Liceo", "statale",
     "Corso Montevecchio 67"),
    ("sch-avogadro", 7.6950, 45.0690, "Istituto Tecnico Avogadro",
     "Istituto tecnico", "statale", "Corso San Maurizio 8"),
    ("sch-cottini", 7.6880, 45.0760, "Liceo Artistico Cottini", "Liceo",
     "statale", "Via Castelgomberto 20"),
    ("sch-birago", 7.6400, 45.0780, "Istituto Professionale Birago",
     "Istituto professionale", "statale", "Corso Novara 65"),
    # San Mauro Torinese
    ("sch-sanmauro-catalin", 7.7900, 45.1000, "Scuola Primaria Catalin",
     "Scuola primaria", "statale", "Via Martiri 4"),
    ("sch-sanmauro-einaudi", 7.8050, 45.1100, "Istituto Einaudi",
     "Scuola secondaria di secondo grado", "statale", "Via Roma 17"),
    # Moncalieri
    ("sch-moncalieri-majorana", 7.6850, 44.9900, "Liceo Majorana",
     "Liceo", "statale", "Via Ada Negri 14"),
    ("sch-moncalieri-collodi", 7.6950, 44.9800, "Scuola Primaria Collodi",
     "Scuola primaria", "statale", "Strada Genova 24"),
]

BUS_STOPS = [
    ("bus-bramante", 7.6760, 45.0372, "Fermata Bramante", "17, 42", "1021"),
    ("bus-polonia", 7.6790, 45.0400, "Fermata Polonia", "42", "1022"),
    ("bus-porta-nuova", 7.6780, 45.0620, "Fermata Porta Nuova", "4, 11, 68", "0202"),
    ("bus-porta-susa", 7.6650, 45.0720, "Fermata Porta Susa", "10, 51", "0350"),
    ("bus-castello", 7.6860, 45.0710, "Fermata Castello", "13, 15, 55", "0470"),
    ("bus-giulio-cesare", 7.6950, 45.0940, "Fermata Giulio Cesare", "4", "0903"),
    ("bus-cibrario", 7.6590, 45.0810, "Fermata Cibrario", "9, 29", "0512"),
    ("bus-tofane", 7.6230, 45.0560, "Fermata Tofane", "2, 36", "0730"),
    ("bus-asti-stazione", 8.2060, 44.8960, "Fermata Asti Stazione", "1", "A100"),
    ("bus-novara-centro", 8.6200, 45.4450, "Fermata Novara Centro", "3", "N200"),
]

MUSEUMS = [
    ("mus-egizio", point(7.6843, 45.0684), "Museo Egizio",
     "Museo archeologico", "Via Accademia delle Scienze 6",
     "Fondazione Museo delle Antichità Egizie"),
    ("mus-cinema", point(7.6932, 45.0690), "Museo Nazionale del Cinema",
     "Museo tematico", "Via Montebello 20", "Fondazione Maria Adriana Prolo"),
    ("mus-gam", point(7.6700, 45.0640), "GAM Galleria Civica d'Arte Moderna",
     "Galleria d'arte", "Via Magenta 31", "Fondazione Torino Musei"),
    ("mus-agnelli", point(7.6620, 45.0320), "Pinacoteca Agnelli",
     "Galleria d'arte", "Via Nizza 230", "Fondazione Agnelli"),
    ("mus-risorgimento", point(7.6862, 45.0685),
     "Museo Nazionale del Risorgimento", "Museo storico",
     "Via Accademia delle Scienze 5", "Ministero della Cultura"),
    ("mus-mao", point(7.6810, 45.0740), "Museo di Arte Orientale",
     "Museo etnografico", "Via San Domenico 11", "Fondazione Torino Musei"),
    ("mus-asti-diocesano", point(8.2050, 44.9000), "Museo Diocesano di Asti",
     "Museo d'arte sacra", "Piazza Cattedrale 2", "Diocesi di Asti"),
]

PARKS = [
    ("park-valentino", "ParcoUrbano",
     {"type": "MultiPolygon", "coordinates": [
         [rect(7.6820, 45.0480, 7.6880, 45.0560)],
         [rect(7.6840, 45.0430, 7.6890, 45.0480)]]},
     {"name": "Parco del Valentino", "circoscrizione": "8", "superficie": "42 ha"}),
    ("park-pellerina", "ParcoUrbano", polygon(7.6250, 45.0830, 7.6400, 45.0920),
     {"name": "Parco della Pellerina", "circoscrizione": "4", "superficie": "83 ha"}),
    ("park-colletta", "ParcoUrbano", polygon(7.7000, 45.0850, 7.7080, 45.0900),
     {"name": "Parco Colletta", "circoscrizione": "7", "superficie": "45 ha"}),
    ("park-mandria", "ParcoRegionale", polygon(7.5500, 45.1400, 7.6200, 45.2000),
     {"name": "Parco Naturale La Mandria", "ente_gestore": "Ente Parchi Reali",
      "superficie": "6571 ha"}),
    ("park-candia", "ParcoProvinciale", polygon(7.8900, 45.3150, 7.9150, 45.3350),
     {"name": "Parco provinciale del Lago di Candia",
      "ente_gestore": "Città metropolitana di Torino", "superficie": "336 ha"}),
    ("park-po-torinese", "AreaProtetta", polygon(7.6900, 45.0000, 7.7200, 45.1200),
     {"name": "Area protetta del Po torinese", "tipologia": "Riserva fluviale",
      "ente_gestore": "Ente Parco del Po", "superficie": "1200 ha"}),
    ("green-giardini-reali", "AreaVerde", polygon(7.6860, 45.0730, 7.6930, 45.0770),
     {"name": "Giardini Reali", "tipologia": "Giardino storico"}),
    ("green-viale-vittorio", "AreaVerde",
     {"type": "LineString", "coordinates": [[7.6600, 45.0660], [7.6700, 45.0650],
                                            [7.6800, 45.0630]]},
     {"name": "Viale alberato di Corso Vittorio Emanuele",
      "tipologia": "Viale alberato"}),
]

CHURCHES = [
    ("cult-san-lorenzo", 7.6845, 45.0720, "Chiesa di San Lorenzo", "barocco"),
    ("cult-consolata", 7.6790, 45.0770, "Santuario della Consolata", "barocco"),
    ("cult-superga", 7.7670, 45.0800, "Basilica di Superga", "barocco"),
    ("cult-duomo", 7.6850, 45.0730, "Duomo di Torino", "rinascimentale"),
    ("cult-san-domenico", 7.6800, 45.0750, "Chiesa di San Domenico", "gotico"),
]

LIBRARIES = [
    ("lib-civica-centrale", 7.6830, 45.0760, "Biblioteca Civica Centrale",
     "Biblioteca civica", "Via della Cittadella 5"),
    ("lib-villa-amoretti", 7.6430, 45.0520, "Biblioteca civica Villa Amoretti",
     "Biblioteca civica", "Corso Orbassano 200"),
    ("lib-nazionale", 7.6900, 45.0680, "Biblioteca Nazionale Universitaria",
     "Biblioteca nazionale", "Piazza Carlo Alberto 3"),
    ("lib-reale", 7.6870, 45.0720, "Biblioteca Reale", "Biblioteca statale",
     "Piazza Castello 191"),
    ("lib-asti-astense", 8.2070, 44.9010, "Biblioteca Astense",
     "Biblioteca civica", "Corso Alfieri 375"),
]


def schools_doc():
    return {"type": "FeatureCollection", "features": [
        feature(fid, point(lon, lat), {"name": n, "grado": g, "gestione": ge,
                                       "indirizzo": a})
        for (fid, lon, lat, n, g, ge, a) in SCHOOLS]}


def stops_doc():
    return {"type": "FeatureCollection", "features": [
        feature(fid, point(lon, lat), {"name": n, "linee": l, "codice": c})
        for (fid, lon, lat, n, l, c) in BUS_STOPS]}


def museums_doc():
    return {"type": "FeatureCollection", "features": [
        feature(fid, g, {"name": n, "tipologia": t, "indirizzo": a, "gestore": ge})
        for (fid, g, n, t, a, ge) in MUSEUMS]}


def parks_doc():
    feats = []
    for (fid, cid, g, props) in PARKS:
        p = dict(props)
        p["concept"] = cid
        feats.append(feature(fid, g, p))
    return {"type": "FeatureCollection", "features": feats}


def churches_doc():
    return {"type": "FeatureCollection", "features": [
        feature(fid, point(lon, lat), {"name": n, "stile": s,
                                       "confessione": "cattolica"})
        for (fid, lon, lat, n, s) in CHURCHES]}


def libraries_doc():
    return {"type": "FeatureCollection", "features": [
        feature(fid, point(lon, lat), {"name": n, "tipologia": t, "indirizzo": a})
        for (fid, lon, lat, n, t, a) in LIBRARIES]}


# --------------------------------------------------------------------------
# Derived ids and gold sets


def fnv1a64(s):
    h = 1469598103934665603
    for b in s.encode("utf-8"):
        h ^= b
        h = (h * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h


def item_id(f, concept_id, ordinal):
    if "id" in f:
        return f["id"]
    return "%s-%016x" % (concept_id, fnv1a64("%s#%d" % (concept_id, ordinal)))


def geometry_box(g):
    pts = []

    def walk(c):
        if isinstance(c[0], (int, float)):
            pts.append(c)
        else:
            for x in c:
                walk(x)
    walk(g["coordinates"])
    return (min(p[0] for p in pts), min(p[1] for p in pts),
            max(p[0] for p in pts), max(p[1] for p in pts))


def overlaps(a, b):
    return a[0] <= b[2] and b[0] <= a[2] and a[1] <= b[3] and b[1] <= a[3]


def all_items(docs):
    items = []  # (id, concept, box)
    for concept_id, doc in docs:
        for i, f in enumerate(doc["features"]):
            cid = concept_id or f["properties"]["concept"]
            items.append((item_id(f, cid, i), cid, geometry_box(f["geometry"])))
    return items


def extent(items, concepts, box):
    return sorted(i for (i, c, b) in items if c in concepts and overlaps(b, box))


def query_log(items):
    g = GAZETTEER
    recs = []

    def only(text, concepts, box, viewport=None, selected=None):
        r = {"text": text, "concepts": sorted(concepts), "qualifiers": [],
             "items": extent(items, set(concepts), box)}
        if viewport is not None:
            r["viewport"] = list(viewport)
        if selected is not None:
            r["selected"] = selected
        recs.append(r)

    only("ospedali a Torino", ["Ospedale"], g["torino"])
    only("nosocomi a Torino", ["Ospedale"], g["torino"])
    only("cliniche a Torino", ["Ospedale"], g["torino"])
    only("Ospedali nosocomi torino", ["Ospedale"], g["torino"])
    only("ospedali ad Asti", ["Ospedale"], g["asti"])
    only("ospedali a Cuneo", ["Ospedale"], g["cuneo"])
    only("ospedali a Novara", ["Ospedale"], g["novara"])
    only("ospedali presso Novara", ["Ospedale"], g["novara"])
    only("ospedali ad Alessandria", ["Ospedale"], g["alessandria"])
    only("ospedali a Biella", ["Ospedale"], g["biella"])
    only("ospedali a Vercelli", ["Ospedale"], g["vercelli"])
    only("ospedali a Ivrea", ["Ospedale"], g["ivrea"])
    only("ospedali a Pinerolo", ["Ospedale"], g["pinerolo"])
    only("ospedali a Moncalieri", ["Ospedale"], g["moncalieri"])
    only("ospedali in Piemonte", ["Ospedale"], g["piemonte"])
    only("ospedali a San Mauro Torinese", ["Ospedale"], g["san mauro torinese"])
    only("ospedali", ["Ospedale"], g["asti"], viewport=g["asti"])
    only("ospedali a Torino", ["Ospedale"], g["cuneo"], viewport=g["cuneo"])
    only("scuole a Torino", ["Scuola"], g["torino"])
    only("scuole a San Mauro Torinese", ["Scuola"], g["san mauro torinese"])
    only("scuole a Moncalieri", ["Scuola"], g["moncalieri"])
    only("ospedali e scuole a Torino", ["Ospedale", "Scuola"], g["torino"])
    only("musei a Torino", ["Museo"], g["torino"])
    only("pinacoteche a Torino", ["Museo"], g["torino"])
    only("musei ad Asti", ["Museo"], g["asti"])
    only("biblioteche a Torino", ["Biblioteca"], g["torino"])
    only("fermate bus a Torino", ["FermataBus"], g["torino"])
    only("fermate a Torino", ["FermataBus"], g["torino"])
    only("chiese a Torino", ["LuogoDiCulto"], g["torino"])
    only("santuari a Torino", ["LuogoDiCulto"], g["torino"])
    only("aree protette a Torino", ["AreaProtetta"], g["torino"])
    only("parchi a Torino", ["ParcoUrbano"], g["torino"], selected=["ParcoUrbano"])
    only("parchi in Piemonte", ["ParcoProvinciale", "ParcoRegionale"],
         g["piemonte"], selected=["ParcoProvinciale", "ParcoRegionale"])

    def qual(text, concepts, qualifiers, gold):
        recs.append({"text": text, "concepts": sorted(concepts),
                     "qualifiers": qualifiers, "items": sorted(gold)})

    qual("nosocomi pediatrici a Torino", ["Ospedale"],
         [["pediatrico"], ["infantile"]], ["osp-regina-margherita"])
    qual("scuole primarie a Torino", ["Scuola"], [["primaria"]],
         ["sch-gabelli", "sch-pestalozzi", "sch-manzoni"])
    qual("Ospedale San Giovanni Battista a Torino", ["Ospedale"],
         [["san", "giovanni", "battista"]], ["osp-molinette"])
    qual("Ospedale San Giovanni Bosco a Torino", ["Ospedale"],
         [["san", "giovanni", "bosco"]], ["osp-san-giovanni-bosco"])
    qual("musei egizi a Torino", ["Museo"], [["egizio"]], ["mus-egizio"])
    qual("biblioteca civica a Torino", ["Biblioteca"], [["civico"]],
         ["lib-civica-centrale", "lib-villa-amoretti"])
    qual("ospedali oftalmici a Torino", ["Ospedale"], [["oftalmico"]],
         ["osp-oftalmico"])
    qual("chiese barocche a Torino", ["LuogoDiCulto"], [["barocco"]],
         ["cult-san-lorenzo", "cult-consolata", "cult-superga"])
    qual("ospedali per bambini a Torino", ["Ospedale"], [["bambino"]],
         ["osp-regina-margherita"])
    qual("ospedali infantili a Torino", ["Ospedale"],
         [["infantile"], ["pediatrico"]],
         ["osp-regina-margherita", "osp-sant-anna"])
    qual("scuole paritarie a Torino", ["Scuola"], [["paritaria"]],
         ["sch-maria-ausiliatrice"])

    # Records that cannot be scored: a concept the ontology lacks, and a
    # keyword-only query without a scripted disambiguation choice.
    recs.append({"text": "aeroporti a Torino", "concepts": ["Aeroporto"],
                 "qualifiers": [], "items": []})
    recs.append({"text": "parchi a Torino", "concepts": ["ParcoUrbano"],
                 "qualifiers": [],
                 "items": extent(items, {"ParcoUrbano"}, g["torino"])})
    return recs


# --------------------------------------------------------------------------
# Writers


def write(path, text):
    full = os.path.join(HERE, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def dump_json(obj):
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def ontology_text(concepts):
    return "".join(dump_json(c) + "\n" for c in sorted(concepts, key=lambda c: c["id"]))


def lemma_text(table):
    return "".join("%s\t%s\n" % (k, table[k]) for k in sorted(table))


def gazetteer_text(entries):
    return "".join("%s\t%s\t%s\t%s\t%s\n" % ((name,) + tuple(repr(v) for v in box))
                   for name, box in sorted(entries.items()))


def geojson_text(doc):
    feats = ",\n".join("  " + dump_json(f) for f in doc["features"])
    return '{"type":"FeatureCollection","features":[\n' + feats + "\n]}\n"


def main():
    rng = random.Random(20170401)

    write("it/ontology.jsonl", ontology_text(IT_CONCEPTS))
    write("it/lemmas.tsv", lemma_text(IT_LEMMAS))
    write("it/stopwords.txt", "".join(w + "\n" for w in IT_STOPWORDS))
    write("it/synonyms.txt", "".join(", ".join(g) + "\n" for g in IT_SYNONYMS))
    write("it/gazetteer.tsv", gazetteer_text(GAZETTEER))

    docs = [
        ("Ospedale", hospitals_doc(rng)),
        ("Scuola", schools_doc()),
        ("FermataBus", stops_doc()),
        ("Museo", museums_doc()),
        (None, parks_doc()),
        ("LuogoDiCulto", churches_doc()),
        ("Biblioteca", libraries_doc()),
    ]
    names = ["hospitals", "schools", "bus_stops", "museums", "parks",
             "places_of_worship", "libraries"]
    for (cid, doc), name in zip(docs, names):
        write("it/items/%s.geojson" % name, geojson_text(doc))

    items = all_items(docs)
    write("it/queries.jsonl", "".join(dump_json(r) + "\n" for r in query_log(items)))

    write("en/ontology.jsonl", ontology_text(EN_CONCEPTS))
    write("en/lemmas.tsv", lemma_text(EN_LEMMAS))
    write("en/stopwords.txt", "".join(w + "\n" for w in EN_STOPWORDS))
    write("en/synonyms.txt", "".join(", ".join(g) + "\n" for g in EN_SYNONYMS))
    write("en/gazetteer.tsv", gazetteer_text({"torino": GAZETTEER["torino"]}))

    files = {"ontology": "ontology.jsonl", "lemmas": "lemmas.tsv",
             "stopwords": "stopwords.txt", "synonyms": "synonyms.txt",
             "gazetteer": "gazetteer.tsv", "store": "store.jsonl"}
    write("it/geosem.json", json.dumps(dict(
        files, prepositions=["a", "ad", "in", "di", "presso"], beta=0.5,
        gamma=0.2, threshold_rounding="ceil", related_radius=0.005,
        listen="127.0.0.1:8080"), indent=2) + "\n")
    write("en/geosem.json", json.dumps(dict(
        files, prepositions=["in", "at", "near"]), indent=2) + "\n")


if __name__ == "__main__":
    main()
