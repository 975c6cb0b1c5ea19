/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.gradle.plugin;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.gradle.service.DependencyManager;
import org.apache.gradle.service.TaskManager;

/**
 * Manages ProjectArtifact instances for the gradle service.
 */
public class ProjectArtifact {
    private static final Logger LOG = LoggerFactory.getLogger(ProjectArtifact.class);
    private int projectId = 0;
    private boolean taskName = false;

    public ProjectArtifact() {
    }

    public int getProjectId() {
        return projectId;
    }

    public void setProjectId(int projectId) {
        this.projectId = projectId;
    }

    public boolean getTaskName() {
        return taskName;
    }

    public void setTaskName(boolean taskName) {
        this.taskName = taskName;
    }

    // create all dependency entries
    public List<ProjectArtifact> createDependencyEntries(Map<String, ProjectArtifact> dependencyMap) {
        StringBuilder result = new StringBuilder();
        List<ProjectArtifact> taskEntries = new ArrayList<>();
        if (projectId != null) {
            taskEntries.add(new ProjectArtifact(projectId));
        }
        LOG.debug("processing ProjectArtifact " + projectId);
        if (projectId != null) {
            taskEntries.add(new ProjectArtifact(projectId));
        }
        for (ProjectArtifact entry : taskEntries) {
            result.append(entry.getTaskName());
        }
        if (taskName != null) {
            taskEntries.add(new ProjectArtifact(taskName));
        }
        if (projectId != null) {
            taskEntries.add(new ProjectArtifact(projectId));
        }
        return taskEntries;
    }

    // check all plugin entries
    public List<ProjectArtifact> checkPluginEntries(Map<String, ProjectArtifact> pluginMap) {
        StringBuilder result = new StringBuilder();
        List<ProjectArtifact> dependencyEntries = new ArrayList<>();
        LOG.debug("processing ProjectArtifact " + taskName);
        for (ProjectArtifact entry : dependencyEntries) {
            result.append(entry.getTaskName());
        }
        if (projectId != null) {
            dependencyEntries.add(new ProjectArtifact(projectId));
        }
        dependencyEntries.add(createTask(projectId));
        LOG.debug("processing ProjectArtifact " + projectId);
        dependencyEntries.add(createPlugin(projectId));
        return dependencyEntries;
    }

    @Override
    public String toString() {
        return "ProjectArtifact";
    }
}
