// Pure SVG string builders.  Rendering never decides anything: faces, braces,
// ribbons and badge text all come straight from the document and the latest
// service response.

import type {
  AnalyzeResponse,
  EdgePair,
  FrameworkDocument,
  VertexId,
} from './types.js'
import type { StudioSnapshot } from './state.js'

const RIBBON_COLORS = [
  '#d62728', '#1f77b4', '#2ca02c', '#ff7f0e', '#9467bd',
  '#8c564b', '#e377c2', '#17becf', '#bcbd22', '#7f7f7f',
]

export function ribbonColor(ribbonId: number): string {
  return RIBBON_COLORS[ribbonId % RIBBON_COLORS.length]
}

function esc(value: string): string {
  return value.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/"/g, '&quot;')
}

function fmt(value: number): string {
  return value.toFixed(4)
}

export interface ViewBox {
  minX: number
  minY: number
  width: number
  height: number
}

export function viewBoxFor(coords: Record<VertexId, [number, number]>,
                           pad = 0.6): ViewBox {
  const xs = Object.values(coords).map((p) => p[0])
  const ys = Object.values(coords).map((p) => p[1])
  const minX = Math.min(...xs) - pad
  const minY = Math.min(...ys) - pad
  return {
    minX,
    minY,
    width: Math.max(...xs) + pad - minX,
    height: Math.max(...ys) + pad - minY,
  }
}

function baseCoords(doc: FrameworkDocument): Record<VertexId, [number, number]> {
  const coords: Record<VertexId, [number, number]> = {}
  for (const v of doc.vertices) coords[v.id] = [v.x, v.y]
  return coords
}

// SVG y grows downward; flip so documents render in math orientation.
function point(coords: Record<VertexId, [number, number]>, v: VertexId,
               box: ViewBox): [number, number] {
  const [x, y] = coords[v]
  return [x, box.minY + box.height - (y - box.minY)]
}

function mid(a: [number, number], b: [number, number]): [number, number] {
  return [(a[0] + b[0]) / 2, (a[1] + b[1]) / 2]
}

export interface FrameworkViewOptions {
  coords?: Record<VertexId, [number, number]>
  showRibbons?: boolean
  hoveredRibbon?: number | null
  ghostBraces?: EdgePair[]
}

/**
 * The main drawing: clickable faces, structural edges, braces, optional
 * dashed ribbon overlays and ghost braces for suggested completions.
 * Faces carry data-face="u1,u2,u3,u4" for click delegation.
 */
export function renderFrameworkView(doc: FrameworkDocument,
                                    analysis: AnalyzeResponse | null,
                                    options: FrameworkViewOptions = {}): string {
  const coords = options.coords ?? baseCoords(doc)
  const box = viewBoxFor(coords)
  const parts: string[] = []
  parts.push(
    `<svg class="framework" viewBox="${fmt(box.minX)} ${fmt(box.minY)} ` +
    `${fmt(box.width)} ${fmt(box.height)}" xmlns="http://www.w3.org/2000/svg">`)

  const braceSet = new Set(doc.braces.map((b) => b.join(',')))
  if (analysis) {
    for (const face of analysis.four_cycles) {
      const pts = face.map((v) => point(coords, v, box))
      const braced = isFaceBraced(face, braceSet)
      parts.push(
        `<polygon class="face${braced ? ' braced' : ''}" ` +
        `data-face="${esc(face.join(','))}" ` +
        `points="${pts.map((p) => `${fmt(p[0])},${fmt(p[1])}`).join(' ')}"/>`)
    }
  }

  for (const [u, v] of doc.edges) {
    const [x1, y1] = point(coords, u, box)
    const [x2, y2] = point(coords, v, box)
    parts.push(`<line class="edge" x1="${fmt(x1)}" y1="${fmt(y1)}" ` +
               `x2="${fmt(x2)}" y2="${fmt(y2)}"/>`)
  }

  if (options.showRibbons !== false && analysis) {
    parts.push(renderRibbonOverlay(doc, analysis, coords, box,
                                   options.hoveredRibbon ?? null))
  }

  for (const [u, v] of doc.braces) {
    const [x1, y1] = point(coords, u, box)
    const [x2, y2] = point(coords, v, box)
    parts.push(`<line class="brace" x1="${fmt(x1)}" y1="${fmt(y1)}" ` +
               `x2="${fmt(x2)}" y2="${fmt(y2)}"/>`)
  }

  for (const [u, v] of options.ghostBraces ?? []) {
    const [x1, y1] = point(coords, u, box)
    const [x2, y2] = point(coords, v, box)
    parts.push(`<line class="ghost-brace" data-ghost="${esc(`${u},${v}`)}" ` +
               `x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}"/>`)
  }

  for (const vertex of doc.vertices) {
    const [x, y] = point(coords, vertex.id, box)
    parts.push(`<circle class="vertex" cx="${fmt(x)}" cy="${fmt(y)}" r="0.07"/>`)
  }

  parts.push('</svg>')
  return parts.join('')
}

function isFaceBraced(face: [VertexId, VertexId, VertexId, VertexId],
                      braceSet: Set<string>): boolean {
  const d1 = [face[0], face[2]].sort().join(',')
  const d2 = [face[1], face[3]].sort().join(',')
  return braceSet.has(d1) || braceSet.has(d2)
}

/**
 * Dashed midline paths: each face contributes two crossing segments joining
 * midpoints of opposite edges, drawn in the color of the ribbon the pair
 * belongs to.  The union of a ribbon's segments traces the ribbon through
 * the framework.
 */
function renderRibbonOverlay(doc: FrameworkDocument, analysis: AnalyzeResponse,
                             coords: Record<VertexId, [number, number]>,
                             box: ViewBox, hovered: number | null): string {
  const parts: string[] = ['<g class="ribbons">']
  for (const face of analysis.four_cycles) {
    const pts = face.map((v) => point(coords, v, box))
    const pairs: Array<[number, number, number, number, string]> = [
      [0, 1, 2, 3, edgeKey(face[0], face[1])],
      [1, 2, 3, 0, edgeKey(face[1], face[2])],
    ]
    for (const [a, b, c, d, key] of pairs) {
      const ribbon = analysis.ribbon_of[key]
      if (ribbon === undefined) continue
      const m1 = mid(pts[a], pts[b])
      const m2 = mid(pts[c], pts[d])
      const classes = hovered !== null && hovered === ribbon
        ? 'ribbon-path hovered' : 'ribbon-path'
      parts.push(
        `<line class="${classes}" data-ribbon="${ribbon}" ` +
        `stroke="${ribbonColor(ribbon)}" ` +
        `x1="${fmt(m1[0])}" y1="${fmt(m1[1])}" ` +
        `x2="${fmt(m2[0])}" y2="${fmt(m2[1])}"/>`)
    }
  }
  parts.push('</g>')
  return parts.join('')
}

function edgeKey(u: VertexId, v: VertexId): string {
  return u <= v ? `${u},${v}` : `${v},${u}`
}

/** Bracing-graph panel: ribbons on a circle, colored by component. */
export function renderBracingPanel(analysis: AnalyzeResponse,
                                   hovered: number | null): string {
  const n = analysis.bracing_graph.vertices.length
  const radius = 1.0
  const positions = new Map<number, [number, number]>()
  analysis.bracing_graph.vertices.forEach((rid, i) => {
    const angle = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2
    positions.set(rid, [radius * Math.cos(angle), radius * Math.sin(angle)])
  })
  const componentOf = new Map<number, number>()
  analysis.bracing_graph.components.forEach((component, index) => {
    for (const rid of component) componentOf.set(rid, index)
  })

  const parts: string[] = [
    '<svg class="bracing-panel" viewBox="-1.35 -1.35 2.7 2.7" ' +
    'xmlns="http://www.w3.org/2000/svg">',
  ]
  for (const [a, b] of analysis.bracing_graph.edges) {
    const [x1, y1] = positions.get(a)!
    const [x2, y2] = positions.get(b)!
    parts.push(`<line class="bracing-edge" x1="${fmt(x1)}" y1="${fmt(y1)}" ` +
               `x2="${fmt(x2)}" y2="${fmt(y2)}"/>`)
  }
  for (const rid of analysis.bracing_graph.vertices) {
    const [x, y] = positions.get(rid)!
    const classes = hovered === rid ? 'bracing-node hovered' : 'bracing-node'
    parts.push(
      `<circle class="${classes}" data-ribbon="${rid}" ` +
      `data-component="${componentOf.get(rid)}" ` +
      `fill="${ribbonColor(rid)}" cx="${fmt(x)}" cy="${fmt(y)}" r="0.12"/>`)
  }
  parts.push('</svg>')
  return parts.join('')
}

export function renderBadge(snapshot: StudioSnapshot): string {
  const classes: Record<string, string> = {
    Rigid: 'badge rigid',
    Flexible: 'badge flexible',
    Refused: 'badge refused',
    Pending: 'badge pending',
  }
  let detail = ''
  if (snapshot.analysis) {
    const components = snapshot.analysis.bracing_graph.components.length
    detail = snapshot.badge === 'Rigid'
      ? 'bracing graph connected'
      : `${components} bracing components, ` +
        `${snapshot.analysis.cartesian_nac_count} certifying colorings`
  } else if (snapshot.refusal) {
    detail = snapshot.refusal.message
  }
  return `<span class="${classes[snapshot.badge]}">${esc(snapshot.badge)}</span>` +
         `<span class="badge-detail">${esc(detail)}</span>`
}
