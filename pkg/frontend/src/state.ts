// Studio state store.  The document is the single source of truth: braces on
// screen are always the document's braces, and the verdict badge only ever
// shows the result of the latest completed analyze call (stale responses are
// discarded by sequence number).  All document edits are pure transitions,
// so undo/redo replays to identical analyze results.

import type { AnalysisClient } from './api.js'
import type {
  AnalyzeOutcome,
  AnalyzeResponse,
  EdgePair,
  FlexResponse,
  FrameworkDocument,
  RefusalResponse,
  VertexId,
} from './types.js'

export type Badge = 'Rigid' | 'Flexible' | 'Refused' | 'Pending'

export interface StudioSnapshot {
  document: FrameworkDocument
  badge: Badge
  analysis: AnalyzeResponse | null
  refusal: RefusalResponse | null
  coloringIndex: number
  t: number
  hoveredRibbon: number | null
  ghostBraces: EdgePair[]
}

export function canonicalEdge(u: VertexId, v: VertexId): EdgePair {
  return u <= v ? [u, v] : [v, u]
}

function sortPairs(pairs: EdgePair[]): EdgePair[] {
  return [...pairs].sort((a, b) =>
    a[0] < b[0] ? -1 : a[0] > b[0] ? 1 : a[1] < b[1] ? -1 : a[1] > b[1] ? 1 : 0)
}

export function canonicalDocument(doc: FrameworkDocument): FrameworkDocument {
  const out: FrameworkDocument = {
    schema_version: 1,
    vertices: [...doc.vertices].sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0)),
    edges: sortPairs(doc.edges.map(([u, v]) => canonicalEdge(u, v))),
    braces: sortPairs(doc.braces.map(([u, v]) => canonicalEdge(u, v))),
  }
  if (doc.metadata !== undefined) out.metadata = doc.metadata
  return out
}

export function documentBytes(doc: FrameworkDocument): string {
  return JSON.stringify(canonicalDocument(doc))
}

/** The two diagonals of a face given in cyclic vertex order. */
export function faceDiagonals(face: [VertexId, VertexId, VertexId, VertexId]):
    [EdgePair, EdgePair] {
  return [canonicalEdge(face[0], face[2]), canonicalEdge(face[1], face[3])]
}

function samePair(a: EdgePair, b: EdgePair): boolean {
  return a[0] === b[0] && a[1] === b[1]
}

export function toggleBraceInDocument(
    doc: FrameworkDocument,
    face: [VertexId, VertexId, VertexId, VertexId]): FrameworkDocument {
  const [d1, d2] = faceDiagonals(face)
  const existing = doc.braces.filter((b) => samePair(b, d1) || samePair(b, d2))
  const braces = existing.length > 0
    ? doc.braces.filter((b) => !samePair(b, d1) && !samePair(b, d2))
    : [...doc.braces, d1]
  return canonicalDocument({ ...doc, braces })
}

export interface FlexSamples {
  response: FlexResponse
  tRange: [number, number]
}

export class StudioState {
  private document: FrameworkDocument
  private analysis: AnalyzeResponse | null = null
  private refusal: RefusalResponse | null = null
  private badge: Badge = 'Pending'
  private requestSeq = 0
  private appliedSeq = 0
  private undoStack: FrameworkDocument[] = []
  private redoStack: FrameworkDocument[] = []
  private coloringIndex = 0
  private t = 0
  private hoveredRibbon: number | null = null
  private flexSamples: FlexSamples | null = null
  private listeners: Array<(snapshot: StudioSnapshot) => void> = []

  constructor(private readonly client: AnalysisClient,
              document: FrameworkDocument) {
    this.document = canonicalDocument(document)
  }

  subscribe(listener: (snapshot: StudioSnapshot) => void): () => void {
    this.listeners.push(listener)
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener)
    }
  }

  private notify(): void {
    const snapshot = this.snapshot()
    for (const listener of this.listeners) listener(snapshot)
  }

  snapshot(): StudioSnapshot {
    return {
      document: this.document,
      badge: this.badge,
      analysis: this.analysis,
      refusal: this.refusal,
      coloringIndex: this.coloringIndex,
      t: this.t,
      hoveredRibbon: this.hoveredRibbon,
      ghostBraces: this.analysis?.completion_suggestion ?? [],
    }
  }

  getDocument(): FrameworkDocument {
    return this.document
  }

  /** Run an analyze call; only the latest completed request may apply. */
  async analyzeNow(): Promise<AnalyzeOutcome | null> {
    const seq = ++this.requestSeq
    const doc = this.document
    const outcome = await this.client.analyze(doc)
    if (seq < this.appliedSeq) return null // a newer response already landed
    this.appliedSeq = seq
    if (seq !== this.requestSeq) return null // a newer request is in flight
    if (outcome.kind === 'ok') {
      this.analysis = outcome.analysis
      this.refusal = null
      this.badge = outcome.analysis.verdict.status
    } else {
      this.analysis = null
      this.refusal = outcome.refusal
      this.badge = 'Refused'
    }
    this.flexSamples = null
    this.notify()
    return outcome
  }

  private async applyDocument(next: FrameworkDocument): Promise<void> {
    this.undoStack.push(this.document)
    this.redoStack = []
    this.document = next
    this.badge = 'Pending'
    this.notify()
    await this.analyzeNow()
  }

  async toggleBrace(face: [VertexId, VertexId, VertexId, VertexId]): Promise<void> {
    await this.applyDocument(toggleBraceInDocument(this.document, face))
  }

  /** Replace the document wholesale (file import); history starts over. */
  async loadDocument(doc: FrameworkDocument): Promise<void> {
    this.undoStack = []
    this.redoStack = []
    this.document = canonicalDocument(doc)
    this.badge = 'Pending'
    this.flexSamples = null
    this.notify()
    await this.analyzeNow()
  }

  async acceptSuggestions(): Promise<void> {
    const ghosts = this.analysis?.completion_suggestion ?? []
    if (ghosts.length === 0) return
    const braces = sortPairs([...this.document.braces, ...ghosts])
    await this.applyDocument(canonicalDocument({ ...this.document, braces }))
  }

  async undo(): Promise<void> {
    const previous = this.undoStack.pop()
    if (previous === undefined) return
    this.redoStack.push(this.document)
    this.document = previous
    this.badge = 'Pending'
    this.notify()
    await this.analyzeNow()
  }

  async redo(): Promise<void> {
    const next = this.redoStack.pop()
    if (next === undefined) return
    this.undoStack.push(this.document)
    this.document = next
    this.badge = 'Pending'
    this.notify()
    await this.analyzeNow()
  }

  setHoveredRibbon(ribbon: number | null): void {
    this.hoveredRibbon = ribbon
    this.notify()
  }

  async selectColoring(index: number): Promise<void> {
    if (index !== this.coloringIndex) {
      this.coloringIndex = index
      this.flexSamples = null // switching colorings re-fetches
      this.notify()
    }
  }

  /** Fetch flex samples for the current coloring (only when flexible). */
  async ensureFlexSamples(frames = 48,
                          tRange: [number, number] = [0, 2 * Math.PI]):
      Promise<FlexSamples | null> {
    if (this.badge !== 'Flexible') return null
    if (this.flexSamples !== null) return this.flexSamples
    const response = await this.client.flex(
      this.document, this.coloringIndex, frames, tRange)
    this.flexSamples = { response, tRange }
    this.notify()
    return this.flexSamples
  }

  setT(t: number): void {
    this.t = t
    this.notify()
  }

  /**
   * Coordinates at the slider parameter, interpolated linearly between the
   * two nearest fetched samples (never extrapolated past them).
   */
  frameAt(t: number): Record<VertexId, [number, number]> | null {
    const samples = this.flexSamples
    if (samples === null) return null
    const { t_values, frames } = samples.response
    if (t <= t_values[0]) return frames[0]
    const last = t_values.length - 1
    if (t >= t_values[last]) return frames[last]
    let hi = 1
    while (t_values[hi] < t) hi += 1
    const lo = hi - 1
    const span = t_values[hi] - t_values[lo]
    const w = span > 0 ? (t - t_values[lo]) / span : 0
    const blended: Record<VertexId, [number, number]> = {}
    for (const v of Object.keys(frames[lo])) {
      const [x0, y0] = frames[lo][v]
      const [x1, y1] = frames[hi][v]
      blended[v] = [x0 + w * (x1 - x0), y0 + w * (y1 - y0)]
    }
    return blended
  }

  /** Max deviation of rendered edge lengths from the document's, for the HUD. */
  maxEdgeDrift(frame: Record<VertexId, [number, number]>): number {
    const base: Record<VertexId, [number, number]> = {}
    for (const vertex of this.document.vertices) base[vertex.id] = [vertex.x, vertex.y]
    let worst = 0
    const pairs = [...this.document.edges, ...this.document.braces]
    for (const [u, v] of pairs) {
      const want = Math.hypot(base[u][0] - base[v][0], base[u][1] - base[v][1])
      const got = Math.hypot(frame[u][0] - frame[v][0], frame[u][1] - frame[v][1])
      worst = Math.max(worst, Math.abs(got - want))
    }
    return worst
  }
}
