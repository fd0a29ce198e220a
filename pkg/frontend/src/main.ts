// Browser wiring: connects the store, the renderer and the service client.

import { HttpApiClient } from './api.js'
import { StudioState, documentBytes } from './state.js'
import type { StudioSnapshot } from './state.js'
import { renderBadge, renderBracingPanel, renderFrameworkView } from './render.js'
import type { VertexId } from './types.js'

const SERVICE_URL = (window as unknown as { BRACERIG_URL?: string }).BRACERIG_URL
  ?? 'http://127.0.0.1:8741'

async function boot(): Promise<void> {
  const client = new HttpApiClient(SERVICE_URL)
  const doc = await client.generateGrid(3, 3)
  const state = new StudioState(client, doc)

  const view = document.getElementById('view')!
  const panel = document.getElementById('panel')!
  const badge = document.getElementById('badge')!
  const hud = document.getElementById('hud')!
  const slider = document.getElementById('slider') as HTMLInputElement
  const coloringInput = document.getElementById('coloring') as HTMLInputElement
  const suggestButton = document.getElementById('suggest') as HTMLButtonElement
  const undoButton = document.getElementById('undo') as HTMLButtonElement
  const redoButton = document.getElementById('redo') as HTMLButtonElement

  function draw(snapshot: StudioSnapshot): void {
    const t = Number(slider.value)
    const frame = snapshot.badge === 'Flexible' ? state.frameAt(t) : null
    view.innerHTML = renderFrameworkView(snapshot.document, snapshot.analysis, {
      coords: frame ?? undefined,
      hoveredRibbon: snapshot.hoveredRibbon,
      ghostBraces: snapshot.ghostBraces,
    })
    badge.innerHTML = renderBadge(snapshot)
    panel.innerHTML = snapshot.analysis
      ? renderBracingPanel(snapshot.analysis, snapshot.hoveredRibbon)
      : ''
    slider.disabled = snapshot.badge !== 'Flexible'
    coloringInput.disabled = snapshot.badge !== 'Flexible'
    if (frame) {
      const drift = state.maxEdgeDrift(frame)
      hud.textContent = drift <= 1e-6 ? 'drift ≤ 1e-6' : `drift ${drift.toExponential(2)}`
    } else {
      hud.textContent = ''
    }
  }

  state.subscribe(draw)

  view.addEventListener('click', (event) => {
    const target = event.target as Element
    const face = target.getAttribute('data-face')
    if (face) {
      void state.toggleBrace(face.split(',') as [VertexId, VertexId, VertexId, VertexId])
    }
  })

  view.addEventListener('mouseover', (event) => {
    const target = event.target as Element
    const ribbon = target.getAttribute('data-ribbon')
    state.setHoveredRibbon(ribbon === null ? null : Number(ribbon))
  })

  slider.addEventListener('input', () => {
    void state.ensureFlexSamples().then(() => {
      state.setT(Number(slider.value))
    })
  })

  coloringInput.addEventListener('change', () => {
    void state.selectColoring(Number(coloringInput.value)).then(() =>
      state.ensureFlexSamples().then(() => state.setT(Number(slider.value))))
  })

  suggestButton.addEventListener('click', () => {
    void state.acceptSuggestions()
  })
  undoButton.addEventListener('click', () => void state.undo())
  redoButton.addEventListener('click', () => void state.redo())

  const saveButton = document.getElementById('save') as HTMLButtonElement
  saveButton.addEventListener('click', () => {
    const blob = new Blob([documentBytes(state.getDocument())],
                          { type: 'application/json' })
    const anchor = document.createElement('a')
    anchor.href = URL.createObjectURL(blob)
    anchor.download = 'framework.json'
    anchor.click()
    URL.revokeObjectURL(anchor.href)
  })

  const fileInput = document.getElementById('load') as HTMLInputElement
  fileInput.addEventListener('change', async () => {
    const file = fileInput.files?.[0]
    if (!file) return
    const parsed = JSON.parse(await file.text())
    await state.loadDocument(parsed)
    fileInput.value = ''
  })

  await state.analyzeNow()
}

void boot()
